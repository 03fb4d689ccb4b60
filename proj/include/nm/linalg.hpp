#pragma once

// Dense exact linear algebra over Q: fraction-free (Bareiss) rank and
// reduced row echelon form.

#include <cstddef>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nm/arith.hpp"

namespace nm {

using Rational = boost::multiprecision::cpp_rational;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

/// Rank of an integer matrix by Bareiss fraction-free elimination.  Every
/// intermediate entry is a minor of the input, so no fractions appear.
inline std::size_t bareiss_rank(Matrix<BigInt> a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    a.swap_rows(rank, piv);
    const BigInt p = a(rank, c);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const BigInt f = a(r, c);
      for (std::size_t k = c + 1; k < cols; ++k) a(r, k) = (p * a(r, k) - f * a(rank, k)) / prev;
      a(r, c) = 0;
    }
    // Columns skipped before c are zero below the pivot rows; rows above are untouched.
    prev = p;
    ++rank;
  }
  return rank;
}

/// Rank over Q: rows are scaled to integers, then eliminated fraction-free.
inline std::size_t rank(const Matrix<Rational>& m) {
  Matrix<BigInt> a(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BigInt l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const BigInt& d = boost::multiprecision::denominator(m(r, c));
      l = l / boost::multiprecision::gcd(l, d) * d;
    }
    for (std::size_t c = 0; c < m.cols(); ++c)
      a(r, c) = boost::multiprecision::numerator(m(r, c)) * (l / boost::multiprecision::denominator(m(r, c)));
  }
  return bareiss_rank(std::move(a));
}

/// Result of reducing a matrix to reduced row echelon form.
struct Echelon {
  Matrix<Rational> rows;             // nonzero rows only, each with a leading 1
  std::vector<std::size_t> pivots;   // pivot column of each row
};

inline Echelon rref(Matrix<Rational> a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    a.swap_rows(rank, piv);
    const Rational inv = 1 / a(rank, c);
    for (std::size_t k = c; k < cols; ++k) a(rank, k) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a(r, c) == 0) continue;
      const Rational f = a(r, c);
      for (std::size_t k = c; k < cols; ++k) a(r, k) -= f * a(rank, k);
    }
    pivots.push_back(c);
    ++rank;
  }
  Echelon out{Matrix<Rational>(rank, cols), std::move(pivots)};
  for (std::size_t r = 0; r < rank; ++r)
    for (std::size_t c = 0; c < cols; ++c) out.rows(r, c) = a(r, c);
  return out;
}

}  // namespace nm
