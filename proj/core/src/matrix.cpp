#include "monowalk/matrix.hpp"

#include <algorithm>
#include <utility>

#include "monowalk/error.hpp"

namespace monowalk {

  RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
      : _rows(rows), _cols(cols), _data(rows * cols) {}

  RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix I(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      I(i, i) = 1;
    }
    return I;
  }

  RationalMatrix RationalMatrix::operator*(RationalMatrix const& that) const {
    if (_cols != that._rows) {
      raise(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    }
    RationalMatrix out(_rows, that._cols);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t k = 0; k < _cols; ++k) {
        Rational const& a = (*this)(i, k);
        if (sgn(a) == 0) {
          continue;
        }
        for (std::size_t j = 0; j < that._cols; ++j) {
          Rational const& b = that(k, j);
          if (sgn(b) != 0) {
            out(i, j) += a * b;
          }
        }
      }
    }
    return out;
  }

  RationalMatrix RationalMatrix::operator-(RationalMatrix const& that) const {
    if (_rows != that._rows || _cols != that._cols) {
      raise(ErrorKind::DimensionMismatch, "matrix difference shape mismatch");
    }
    RationalMatrix out(*this);
    for (std::size_t i = 0; i < _data.size(); ++i) {
      out._data[i] -= that._data[i];
    }
    return out;
  }

  bool RationalMatrix::operator==(RationalMatrix const& that) const {
    return _rows == that._rows && _cols == that._cols && _data == that._data;
  }

  std::vector<Rational> RationalMatrix::apply(std::vector<Rational> const& v) const {
    if (v.size() != _cols) {
      raise(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
    }
    std::vector<Rational> out(_rows);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        if (sgn((*this)(i, j)) != 0 && sgn(v[j]) != 0) {
          out[i] += (*this)(i, j) * v[j];
        }
      }
    }
    return out;
  }

  std::vector<Rational> RationalMatrix::column(std::size_t c) const {
    std::vector<Rational> out(_rows);
    for (std::size_t i = 0; i < _rows; ++i) {
      out[i] = (*this)(i, c);
    }
    return out;
  }

  RationalMatrix RationalMatrix::power(std::size_t exponent) const {
    if (_rows != _cols) {
      raise(ErrorKind::DimensionMismatch, "power of a non-square matrix");
    }
    RationalMatrix result = identity(_rows);
    RationalMatrix base   = *this;
    while (exponent > 0) {
      if (exponent & 1) {
        result = result * base;
      }
      exponent >>= 1;
      if (exponent > 0) {
        base = base * base;
      }
    }
    return result;
  }

  Rational RationalMatrix::trace() const {
    Rational t = 0;
    for (std::size_t i = 0; i < std::min(_rows, _cols); ++i) {
      t += (*this)(i, i);
    }
    return t;
  }

  bool RationalMatrix::is_zero() const {
    for (auto const& x : _data) {
      if (sgn(x) != 0) {
        return false;
      }
    }
    return true;
  }

  std::vector<Rational> solve_linear(RationalMatrix A, std::vector<Rational> b) {
    std::size_t const n = A.rows();
    if (A.cols() != n || b.size() != n) {
      raise(ErrorKind::DimensionMismatch, "solve_linear expects a square system");
    }
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      while (pivot < n && sgn(A(pivot, col)) == 0) {
        ++pivot;
      }
      if (pivot == n) {
        raise(ErrorKind::PreconditionViolated, "singular linear system");
      }
      if (pivot != col) {
        for (std::size_t j = col; j < n; ++j) {
          std::swap(A(pivot, j), A(col, j));
        }
        std::swap(b[pivot], b[col]);
      }
      Rational inv = 1 / A(col, col);
      for (std::size_t j = col; j < n; ++j) {
        A(col, j) *= inv;
      }
      b[col] *= inv;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || sgn(A(r, col)) == 0) {
          continue;
        }
        Rational f = A(r, col);
        for (std::size_t j = col; j < n; ++j) {
          if (sgn(A(col, j)) != 0) {
            A(r, j) -= f * A(col, j);
          }
        }
        b[r] -= f * b[col];
      }
    }
    return b;
  }

}  // namespace monowalk
