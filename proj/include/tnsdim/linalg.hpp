#pragma once

// Exact dense matrices: rank, nullity, nullspace and determinant over the
// active scalar backend.

#include <algorithm>
#include <cstddef>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "tnsdim/errors.hpp"
#include "tnsdim/exactnum.hpp"

namespace tnsdim {

/// Row-major rows x cols matrix. Default-constructed entries are zero.
template <class E>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<E> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw ShapeMismatch("matrix data has wrong length");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  E& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const E& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<E> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const E> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  const std::vector<E>& data() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<E> data_;
};

template <class E>
Matrix<E> identity_matrix(std::size_t n, const E& one) {
  Matrix<E> m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
  return m;
}

template <class E>
Matrix<E> transpose(const Matrix<E>& a) {
  Matrix<E> t(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) t(c, r) = a(r, c);
  }
  return t;
}

template <class E>
Matrix<E> operator*(const Matrix<E>& a, const Matrix<E>& b) {
  if (a.cols() != b.rows()) throw ShapeMismatch("matrix product: inner extents differ");
  Matrix<E> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const E& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

template <class F>
Matrix<typename F::Elem> random_matrix(std::size_t rows, std::size_t cols, const F& field, Rng& rng) {
  Matrix<typename F::Elem> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.random(rng);
  }
  return m;
}

/// Incrementally built reduced row echelon basis. Rows can be streamed in
/// without materializing the full matrix; the retained basis never exceeds
/// `cols` rows.
template <class E>
class Echelon {
 public:
  explicit Echelon(std::size_t cols) : cols_(cols) {}

  /// Reduces `row` against the basis and keeps it if independent.
  /// Returns true if the rank grew.
  bool insert(std::vector<E> row) {
    if (row.size() != cols_) throw ShapeMismatch("echelon insert: wrong row length");
    if (basis_.size() == cols_) return false;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const E coeff = row[pivots_[k]];
      if (coeff.is_zero()) continue;
      const auto& b = basis_[k];
      for (std::size_t c = pivots_[k]; c < cols_; ++c) {
        if (!b[c].is_zero()) row[c] -= coeff * b[c];
      }
    }
    std::size_t pc = 0;
    while (pc < cols_ && row[pc].is_zero()) ++pc;
    if (pc == cols_) return false;
    const E inv = row[pc].inverse();
    for (std::size_t c = pc; c < cols_; ++c) row[c] *= inv;
    // Keep the basis reduced: clear the new pivot column from older rows.
    for (auto& b : basis_) {
      const E coeff = b[pc];
      if (coeff.is_zero()) continue;
      for (std::size_t c = pc; c < cols_; ++c) {
        if (!row[c].is_zero()) b[c] -= coeff * row[c];
      }
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pc) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, pc);
    basis_.insert(basis_.begin() + pos, std::move(row));
    return true;
  }

  std::size_t rank() const { return basis_.size(); }
  std::size_t cols() const { return cols_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const std::vector<std::vector<E>>& basis() const { return basis_; }

  /// Basis of {x : B x = 0} for the row space B collected so far.
  std::vector<std::vector<E>> kernel(const E& one) const {
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : pivots_) is_pivot[p] = true;
    std::vector<std::vector<E>> out;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<E> x(cols_);
      x[free] = one;
      for (std::size_t k = 0; k < basis_.size(); ++k) x[pivots_[k]] = -basis_[k][free];
      out.push_back(std::move(x));
    }
    return out;
  }

 private:
  std::size_t cols_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<E>> basis_;
};

namespace detail {

/// Fraction-free Bareiss elimination on an integer matrix; returns the rank.
inline std::size_t bareiss_rank(std::vector<std::vector<Rational::BigInt>> a, std::size_t cols) {
  using BigInt = Rational::BigInt;
  const std::size_t rows = a.size();
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Exact rank. Gaussian elimination over F_p; Bareiss on the cleared-
/// denominator integer matrix for rationals.
template <class E>
std::size_t rank(const Matrix<E>& m) {
  if constexpr (std::is_same_v<E, Rational>) {
    using BigInt = Rational::BigInt;
    std::vector<std::vector<BigInt>> ints(m.rows(), std::vector<BigInt>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      BigInt lcm = 1;
      for (std::size_t c = 0; c < m.cols(); ++c) {
        BigInt d = m(r, c).denominator();
        lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
      }
      for (std::size_t c = 0; c < m.cols(); ++c) ints[r][c] = m(r, c).numerator() * (lcm / m(r, c).denominator());
    }
    return detail::bareiss_rank(std::move(ints), m.cols());
  } else {
    Echelon<E> ech(m.cols());
    for (std::size_t r = 0; r < m.rows() && ech.rank() < m.cols(); ++r) {
      auto row = m.row(r);
      ech.insert(std::vector<E>(row.begin(), row.end()));
    }
    return ech.rank();
  }
}

template <class E>
std::size_t nullity(const Matrix<E>& m) {
  return m.cols() - rank(m);
}

/// Basis of the right kernel {x : m x = 0}.
template <class E>
std::vector<std::vector<E>> nullspace(const Matrix<E>& m, const E& one) {
  Echelon<E> ech(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    ech.insert(std::vector<E>(row.begin(), row.end()));
  }
  return ech.kernel(one);
}

/// Determinant by elimination. Throws ShapeMismatch for non-square input.
template <class E>
E determinant(Matrix<E> a, const E& one) {
  if (a.rows() != a.cols()) throw ShapeMismatch("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  E det = one;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c).is_zero()) ++piv;
    if (piv == n) return E{} * one;
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(piv, k), a(c, k));
      det = -det;
    }
    det *= a(c, c);
    const E inv = a(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      const E f = a(r, c) * inv;
      if (f.is_zero()) continue;
      for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return det;
}

}  // namespace tnsdim
