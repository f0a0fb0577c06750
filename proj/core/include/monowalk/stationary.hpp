#ifndef MONOWALK_STATIONARY_HPP_
#define MONOWALK_STATIONARY_HPP_

#include <cstddef>
#include <vector>

#include "monowalk/green.hpp"
#include "monowalk/lattice.hpp"
#include "monowalk/monoid.hpp"
#include "monowalk/probability.hpp"
#include "monowalk/walk.hpp"

namespace monowalk {

  inline constexpr std::size_t default_chain_budget = 1'000'000;

  // A distribution on the minimal ideal; pi[i] is the mass of states[i] and
  // states follows G.minimal_ideal.
  struct IdealDistribution {
    std::vector<ElementId> states;
    Distribution           pi;
  };

  // λ_{d(m)} for every element.
  std::vector<Rational> descent_eigenvalues(IdempotentLattice const& L, ProbabilityAssignment const& P);

  // Sum over chains 1 = σ_0 >_R ... >_R σ_q = m of Π T(σ_{i-1}, σ_i) / (1 − λ_{d(σ_{i-1})}).
  // Throws NotAdapted, BudgetExceeded.
  IdealDistribution stationary_chain_formula(FiniteMonoid const&          M,
                                             GreenStructure const&        G,
                                             IdempotentLattice const&     L,
                                             ProbabilityAssignment const& P,
                                             std::size_t                  budget = default_chain_budget);

  // Sum over reduced words over supp P of Π P(w_i) / (1 − λ_{d([w_1...w_{i-1}])}).
  IdealDistribution stationary_reduced_words(FiniteMonoid const&          M,
                                             GreenStructure const&        G,
                                             IdempotentLattice const&     L,
                                             ProbabilityAssignment const& P,
                                             std::size_t                  budget = default_chain_budget);

  // Single product along the unique reduced word; throws NotKarnofskyRhodes
  // unless the right Cayley graph over supp P minus loops is a tree.
  IdealDistribution stationary_kr_product(FiniteMonoid const&          M,
                                          GreenStructure const&        G,
                                          IdempotentLattice const&     L,
                                          ProbabilityAssignment const& P);

  // The linear-solve oracle: stationary vector of the left walk on 0̂.
  IdealDistribution stationary_on_ideal_exact(FiniteMonoid const&          M,
                                              GreenStructure const&        G,
                                              ProbabilityAssignment const& P);

  // π(ω) = Σ_{x ∈ L, xω = ω} μ(x), L = M z the minimal left ideal and μ the
  // stationary law of the left walk on L.  Throws NoConstants, NotAdapted.
  Distribution lumped_stationary(FiniteMonoid const&          M,
                                 GreenStructure const&        G,
                                 Action const&                action,
                                 ProbabilityAssignment const& P);

  // Push a distribution on 0̂ forward along the (constant) action on Ω.
  Distribution push_forward(IdealDistribution const& pi, Action const& action);

  // P^{*n}(m) as the sum over chains N(m) of length ≤ n of
  // P(σ) h_{n − dim σ}(λ_{d(σ_0)}, ..., λ_{d(σ_q)}).
  Rational pstar_formula(FiniteMonoid const&          M,
                         IdempotentLattice const&     L,
                         ProbabilityAssignment const& P,
                         ElementId                    m,
                         std::size_t                  n,
                         std::size_t                  budget = default_chain_budget);

  // The same for every m at once.
  Distribution pstar_formula_all(FiniteMonoid const&          M,
                                 IdempotentLattice const&     L,
                                 ProbabilityAssignment const& P,
                                 std::size_t                  n,
                                 std::size_t                  budget = default_chain_budget);

}  // namespace monowalk

#endif  // MONOWALK_STATIONARY_HPP_
