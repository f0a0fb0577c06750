#ifndef MONOWALK_STOCHASTIC_HPP_
#define MONOWALK_STOCHASTIC_HPP_

#include <utility>
#include <vector>

#include "monowalk/matrix.hpp"
#include "monowalk/transformation.hpp"

namespace monowalk {

  bool is_column_stochastic(RationalMatrix const& T);

  // Column-monomial matrix of f: A(f(b), b) = 1.
  RationalMatrix column_monomial(Transformation const& f);

  // Writes T as Σ w_i A_{f_i} with w_i > 0 summing to 1, by greedy peeling:
  // each round takes the first positive entry of every column and removes the
  // smallest of them.  Throws NotStochastic.
  std::vector<std::pair<Rational, Transformation>> decompose_column_stochastic(
      RationalMatrix const& T);

}  // namespace monowalk

#endif  // MONOWALK_STOCHASTIC_HPP_
