#ifndef MONOWALK_MODELS_TSETLIN_HPP_
#define MONOWALK_MODELS_TSETLIN_HPP_

#include <cstdint>
#include <vector>

#include "monowalk/transformation.hpp"

namespace monowalk::models {

  // Move-to-front on the k! shelf orders, books named a, b, c, ... and
  // states in lexicographic order.  Requires 1 ≤ k ≤ 8.
  GeneratorSet tsetlin_generators(std::size_t k);

  // The free left regular band on k letters acting on itself from the left:
  // x·w = xw with the later copy of x erased.  States are the repetition-free
  // words in shortlex order, "1" for the empty word.  Requires 1 ≤ k ≤ 6.
  GeneratorSet free_lrb_generators(std::size_t k);

  // Words with at most copies[i] occurrences of letter i, acted on from the
  // left by x_i·w = x_i w with the last x_i erased once the cap is exceeded.
  // The minimal ideal is the set of words with exactly copies[i] of each
  // letter, so absorption is generalized coupon collecting.
  GeneratorSet promotion_generators(std::vector<std::uint32_t> const& copies);

}  // namespace monowalk::models

#endif  // MONOWALK_MODELS_TSETLIN_HPP_
