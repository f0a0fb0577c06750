#ifndef MONOWALK_WALK_HPP_
#define MONOWALK_WALK_HPP_

#include <cstddef>
#include <vector>

#include "monowalk/green.hpp"
#include "monowalk/matrix.hpp"
#include "monowalk/monoid.hpp"
#include "monowalk/probability.hpp"

namespace monowalk {

  using Distribution = std::vector<Rational>;

  // T(α, β) = Σ_{mβ = α} P(m); column β is the law of the next state from β.
  RationalMatrix transition_matrix(FiniteMonoid const&          M,
                                   Action const&                action,
                                   ProbabilityAssignment const& P);

  // The left walk x ↦ m·x on the minimal ideal, states in the order of
  // G.minimal_ideal.
  RationalMatrix minimal_ideal_matrix(FiniteMonoid const&          M,
                                      GreenStructure const&        G,
                                      ProbabilityAssignment const& P);

  // Sparse right walk on M: from m to m·x with probability P(x).
  struct RightWalk {
    std::vector<std::vector<std::pair<ElementId, Rational>>> out;  // aggregated, target ≠ source
    std::vector<Rational>                                     loop;  // T_R(m, m)
  };
  RightWalk right_walk(FiniteMonoid const& M, ProbabilityAssignment const& P);

  // Law of the right walk after n steps from 1, i.e. P^{*n}.
  Distribution convolution_power(FiniteMonoid const& M, RightWalk const& W, std::size_t n);

  // Period of the support digraph restricted to a strongly connected subset.
  std::size_t digraph_period(RationalMatrix const& T, std::vector<std::size_t> const& states);

  // The unique stationary distribution when the chain has exactly one closed
  // class and that class is aperiodic (other states get mass 0).  Throws
  // NotErgodic otherwise.
  Distribution stationary_exact(RationalMatrix const& T);

  Rational tv_distance(Distribution const& nu, Distribution const& mu);

  // max over point-mass starts β of ‖T^n δ_β − π‖, for n = 0..n_max.
  std::vector<Rational> worst_case_tv_profile(RationalMatrix const& T,
                                              Distribution const&   pi,
                                              std::size_t           n_max);

  enum class ErgodicityVerdict { Ergodic, NotTransitive, NoConstant };

  struct ErgodicityReport {
    ErgodicityVerdict verdict = ErgodicityVerdict::Ergodic;
    std::size_t       period  = 1;  // of the support digraph, when transitive
  };

  ErgodicityReport ergodicity_check(FiniteMonoid const&          M,
                                    Action const&                action,
                                    ProbabilityAssignment const& P);

}  // namespace monowalk

#endif  // MONOWALK_WALK_HPP_
