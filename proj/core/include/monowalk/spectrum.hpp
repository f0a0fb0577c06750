#ifndef MONOWALK_SPECTRUM_HPP_
#define MONOWALK_SPECTRUM_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monowalk/lattice.hpp"
#include "monowalk/matrix.hpp"
#include "monowalk/monoid.hpp"
#include "monowalk/probability.hpp"

namespace monowalk {

  struct SpectrumEntry {
    NodeId                   node = 0;
    Rational                 lambda;
    std::int64_t             multiplicity = 0;
    std::size_t              fixed_points = 0;  // |e_X Ω|
    std::vector<std::string> generators_above;
  };

  // One entry per lattice node, null multiplicities included.
  struct SpectrumReport {
    std::vector<SpectrumEntry> entries;
    std::size_t                omega_size = 0;

    // Distinct eigenvalues with positive total multiplicity, largest first.
    std::vector<std::pair<Rational, std::int64_t>> merged() const;
    std::int64_t total_multiplicity() const;
  };

  // λ_X = Σ_{c(m) ≥ X} P(m).
  Rational eigenvalue(IdempotentLattice const& L, ProbabilityAssignment const& P, NodeId X);

  // |e_Y Ω| by applying each representative idempotent to every state.
  std::vector<std::size_t> fixed_point_counts(IdempotentLattice const& L, Action const& action);

  // m_X = Σ_{Y ≤ X} |e_Y Ω| μ(Y, X).
  std::int64_t multiplicity(IdempotentLattice const&        L,
                            NodeId                          X,
                            std::vector<std::size_t> const& fixed_points);

  // Throws MultiplicityMismatch if a multiplicity is negative or they do not
  // sum to |Ω|.
  SpectrumReport spectrum(FiniteMonoid const&          M,
                          IdempotentLattice const&     L,
                          Action const&                action,
                          ProbabilityAssignment const& P);

  // trace(T^k) = Σ_X m_X λ_X^k for k = 0..|Ω|.  Throws BudgetExceeded when
  // |Ω| > budget.
  bool verify_spectrum_by_traces(RationalMatrix const& T,
                                 SpectrumReport const& S,
                                 std::size_t           budget = 120);
  bool verify_spectrum_by_traces(RationalMatrix const&                                 T,
                                 std::vector<std::pair<Rational, std::int64_t>> const& spectrum,
                                 std::size_t                                           budget = 120);

  struct DiagonalizabilityVerdict {
    bool                                       satisfied = true;
    std::optional<std::pair<ElementId, ElementId>> witness;
  };

  // λ_{d(m)} ≠ λ_{d(m')} for every m and every m' ≠ m in m⟨supp P⟩.  This is
  // sufficient for diagonalizability, not necessary.
  DiagonalizabilityVerdict check_diagonalizable_criterion(FiniteMonoid const&          M,
                                                          IdempotentLattice const&     L,
                                                          ProbabilityAssignment const& P);

  // Π (T − λI) over the given distinct eigenvalues is zero.
  bool verify_diagonalizable_minpoly(RationalMatrix const&        T,
                                     std::vector<Rational> const& distinct_eigenvalues,
                                     std::size_t                  budget = 120);
  bool verify_diagonalizable_minpoly(RationalMatrix const& T,
                                     SpectrumReport const& S,
                                     std::size_t           budget = 120);

  // A closed-form eigenvalue indexed by a set of generator indices.
  struct SubsetEigenvalue {
    std::uint64_t generators = 0;
    Rational      lambda;
    std::int64_t  multiplicity = 0;
  };

  // Node X of the generic report must agree with the closed entry for its
  // generator set G(X) = {g : c(g) ≥ X}; closed entries whose set is no G(X)
  // must have multiplicity 0.  Returns a description of the first
  // disagreement, or nothing when they match.
  std::optional<std::string> match_subset_spectrum(FiniteMonoid const&                  M,
                                                   IdempotentLattice const&             L,
                                                   SpectrumReport const&                S,
                                                   std::vector<SubsetEigenvalue> const& closed);

}  // namespace monowalk

#endif  // MONOWALK_SPECTRUM_HPP_
