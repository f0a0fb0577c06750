#ifndef MONOWALK_BOUNDS_HPP_
#define MONOWALK_BOUNDS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monowalk/green.hpp"
#include "monowalk/lattice.hpp"
#include "monowalk/monoid.hpp"
#include "monowalk/probability.hpp"
#include "monowalk/stationary.hpp"

namespace monowalk {

  // −Σ_{X > 0̂} λ_X^n μ(0̂, X); equals P^{*n}(M ∖ 0̂).  Throws NotLRB, NotAdapted.
  Rational lrb_tv_bound(FiniteMonoid const&          M,
                        GreenStructure const&        G,
                        IdempotentLattice const&     L,
                        ProbabilityAssignment const& P,
                        std::size_t                  n);

  // P^{*n}(M ∖ 0̂) from the n-th convolution power.
  Rational mass_outside_ideal(FiniteMonoid const&          M,
                              GreenStructure const&        G,
                              ProbabilityAssignment const& P,
                              std::size_t                  n);

  // −Σ_{X > 0̂} μ(0̂, X) / (1 − λ_X).  Throws NotLRB, NotAdapted.
  Rational expected_absorption_lrb(FiniteMonoid const&          M,
                                   GreenStructure const&        G,
                                   IdempotentLattice const&     L,
                                   ProbabilityAssignment const& P);

  // Σ over chains 1 = σ_0 > ... > σ_q inside M ∖ 0̂ of
  // P(σ) / Π_{i=0..q} (1 − λ_{d(σ_i)}).  Throws NotAdapted, BudgetExceeded.
  Rational expected_absorption_general(FiniteMonoid const&          M,
                                       GreenStructure const&        G,
                                       IdempotentLattice const&     L,
                                       ProbabilityAssignment const& P,
                                       std::size_t                  budget = default_chain_budget);

  // E[τ] from (I − Q) h = 1 on the transient states of the right walk.
  Rational expected_absorption_fundamental(FiniteMonoid const&          M,
                                           GreenStructure const&        G,
                                           ProbabilityAssignment const& P);

  Rational markov_mixing_bound(Rational const& expected_absorption, std::size_t n);
  Rational simplex_mixing_bound(FiniteMonoid const&          M,
                                GreenStructure const&        G,
                                IdempotentLattice const&     L,
                                ProbabilityAssignment const& P,
                                std::size_t                  n,
                                std::size_t                  budget = default_chain_budget);

  struct ChernoffBound {
    Rational tail;              // Σ_{i<n} C(k,i) p^i (1−p)^{k−i}
    double   chernoff   = 0.0;  // exp(−(kp − (n−1))² / (2kp)), when applicable
    bool     applicable = false;
    double   value      = 0.0;  // min of the two when applicable, else the tail
  };

  // n is the value f(1) of the statistic, p the least positive probability.
  ChernoffBound chernoff_statistic_bound(std::uint64_t n, Rational const& p, std::uint64_t k);

  struct StatisticVerdict {
    bool        holds = true;  // monotone, drops somewhere supported, f = 0 ⇒ constant
    bool        zero_exactly_on_constants = true;  // the converse as well
    std::string reason;
  };

  // The tail bound only uses f = 0 ⇒ constant, so `holds` ignores the
  // converse; the exchange statistic violates it (e_{s1} is already constant
  // on R(w0) in A2).
  StatisticVerdict check_statistic(FiniteMonoid const&             M,
                                   Action const&                   action,
                                   ProbabilityAssignment const&    P,
                                   std::vector<std::uint64_t> const& f);

  // Expected draws to collect j_i copies of coupon i:
  // Σ_{∅≠I} (−1)^{|I|+1} Σ_{r_i < j_i} [(Σr)! / Π r_i!] Π p_i^{r_i} / P_I^{1+Σr}.
  Rational coupon_collector_multi(std::vector<std::uint32_t> const& copies,
                                  std::vector<Rational> const&      p);

  // The same expectation by first-step analysis on capped count vectors.
  Rational coupon_collector_chain(std::vector<std::uint32_t> const& copies,
                                  std::vector<Rational> const&      p);

  enum class BoundKind { LrbMoebius, MarkovExpectation, SimplexSum, ChernoffStatistic };
  std::string bound_kind_name(BoundKind kind);

  struct MixingBoundReport {
    BoundKind               kind = BoundKind::MarkovExpectation;
    std::size_t             n    = 0;
    std::optional<Rational> exact;   // absent for the Chernoff expression
    double                  value = 0.0;
    bool                    assumptions_hold = true;
  };

  // Rows for n = 0..n_max of every bound whose hypotheses hold.
  std::vector<MixingBoundReport> mixing_bound_table(FiniteMonoid const&          M,
                                                    GreenStructure const&        G,
                                                    IdempotentLattice const&     L,
                                                    ProbabilityAssignment const& P,
                                                    std::size_t                  n_max,
                                                    std::size_t budget = default_chain_budget);

}  // namespace monowalk

#endif  // MONOWALK_BOUNDS_HPP_
