#ifndef MONOWALK_MATRIX_HPP_
#define MONOWALK_MATRIX_HPP_

#include <cstddef>
#include <vector>

#include "monowalk/rational.hpp"

namespace monowalk {

  // Dense row-major matrix over the rationals.
  class RationalMatrix {
   public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }

    Rational& operator()(std::size_t r, std::size_t c) {
      return _data[r * _cols + c];
    }
    Rational const& operator()(std::size_t r, std::size_t c) const {
      return _data[r * _cols + c];
    }

    RationalMatrix operator*(RationalMatrix const& that) const;
    RationalMatrix operator-(RationalMatrix const& that) const;
    bool           operator==(RationalMatrix const& that) const;

    std::vector<Rational> apply(std::vector<Rational> const& v) const;
    std::vector<Rational> column(std::size_t c) const;
    RationalMatrix        power(std::size_t exponent) const;
    Rational              trace() const;
    bool                  is_zero() const;

   private:
    std::size_t           _rows = 0;
    std::size_t           _cols = 0;
    std::vector<Rational> _data;
  };

  // Exact solution of A x = b for square nonsingular A; throws
  // PreconditionViolated if A is singular.
  std::vector<Rational> solve_linear(RationalMatrix A, std::vector<Rational> b);

}  // namespace monowalk

#endif  // MONOWALK_MATRIX_HPP_
