#include "monowalk/stochastic.hpp"

#include "monowalk/error.hpp"

namespace monowalk {

  bool is_column_stochastic(RationalMatrix const& T) {
    if (T.rows() != T.cols() || T.rows() == 0) {
      return false;
    }
    for (std::size_t c = 0; c < T.cols(); ++c) {
      Rational s = 0;
      for (std::size_t r = 0; r < T.rows(); ++r) {
        if (sgn(T(r, c)) < 0) {
          return false;
        }
        s += T(r, c);
      }
      if (s != 1) {
        return false;
      }
    }
    return true;
  }

  RationalMatrix column_monomial(Transformation const& f) {
    RationalMatrix A(f.degree(), f.degree());
    for (StateIndex b = 0; b < f.degree(); ++b) {
      A(f[b], b) = 1;
    }
    return A;
  }

  std::vector<std::pair<Rational, Transformation>> decompose_column_stochastic(
      RationalMatrix const& T) {
    if (!is_column_stochastic(T)) {
      raise(ErrorKind::NotStochastic, "matrix is not exactly column-stochastic");
    }
    std::size_t const n = T.cols();
    RationalMatrix    R = T;
    Rational          mass = 1;
    std::vector<std::pair<Rational, Transformation>> out;
    while (sgn(mass) > 0) {
      std::vector<StateIndex> f(n);
      Rational                w;
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t r = 0;
        while (sgn(R(r, c)) == 0) {
          ++r;
        }
        f[c] = static_cast<StateIndex>(r);
        if (c == 0 || R(r, c) < w) {
          w = R(r, c);
        }
      }
      for (std::size_t c = 0; c < n; ++c) {
        R(f[c], c) -= w;
      }
      mass -= w;
      out.emplace_back(w, Transformation(std::move(f)));
    }
    return out;
  }

}  // namespace monowalk
