#pragma once

// The degree-6 invariant of 2x2x2x2 tensors, and the pencil test for
// 2 x a x b tensors: how many points the line s*B1 + t*B2 shares with the
// locus of matrices of rank at most r.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tnsdim/binary_form.hpp"
#include "tnsdim/errors.hpp"
#include "tnsdim/linalg.hpp"
#include "tnsdim/tensor.hpp"

namespace tnsdim {

/// Expands F(alpha, beta) = det(sum_{i,k} t_{i j k l} alpha_i beta_k)_{jl}
/// in the bases {a0^2, a0 a1, a1^2} x {b0^2, b0 b1, b1^2} and returns the
/// determinant of the 3x3 coefficient matrix.
template <class E>
E i6(const DenseTensor<E>& t) {
  if (t.dims() != std::vector<std::size_t>{2, 2, 2, 2}) throw BadShape("i6 needs a 2x2x2x2 tensor");
  auto at = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) { return t[((i * 2 + j) * 2 + k) * 2 + l]; };
  Matrix<E> c(3, 3);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t ip = 0; ip < 2; ++ip) {
      for (std::size_t k = 0; k < 2; ++k) {
        for (std::size_t kp = 0; kp < 2; ++kp) {
          c(i + ip, k + kp) += at(i, 0, k, 0) * at(ip, 1, kp, 1) - at(i, 0, k, 1) * at(ip, 1, kp, 0);
        }
      }
    }
  }
  return c(0, 0) * (c(1, 1) * c(2, 2) - c(1, 2) * c(2, 1)) - c(0, 1) * (c(1, 0) * c(2, 2) - c(1, 2) * c(2, 0)) +
         c(0, 2) * (c(1, 0) * c(2, 1) - c(1, 1) * c(2, 0));
}

template <class E>
struct Pencil {
  std::size_t a = 0, b = 0;
  Matrix<E> b1, b2;
};

/// Slices t[0,:,:] and t[1,:,:] of a 2 x a x b tensor.
template <class E>
Pencil<E> pencil_from_tensor(const DenseTensor<E>& t) {
  if (t.order() != 3 || t.dim(0) != 2) throw BadShape("pencil needs a 2 x a x b tensor");
  const std::size_t a = t.dim(1), b = t.dim(2);
  Pencil<E> p{a, b, Matrix<E>(a, b), Matrix<E>(a, b)};
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      p.b1(i, j) = t[i * b + j];
      p.b2(i, j) = t[a * b + i * b + j];
    }
  }
  return p;
}

template <class E>
DenseTensor<E> tensor_from_pencil(const Pencil<E>& p) {
  if (p.b1.rows() != p.a || p.b1.cols() != p.b || p.b2.rows() != p.a || p.b2.cols() != p.b)
    throw ShapeMismatch("pencil slices have inconsistent shapes");
  std::vector<E> entries(p.b1.data());
  entries.insert(entries.end(), p.b2.data().begin(), p.b2.data().end());
  return DenseTensor<E>({2, p.a, p.b}, std::move(entries));
}

namespace detail {

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Coefficients of the degree <= k polynomial through (x_j, y_j), x_j = j.
template <class F>
std::vector<typename F::Elem> interpolate(const std::vector<typename F::Elem>& y, const F& field) {
  using E = typename F::Elem;
  const std::size_t n = y.size();
  std::vector<E> dd = y;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t j = n - 1; j >= level; --j) {
      dd[j] = (dd[j] - dd[j - 1]) / field.from_int(static_cast<std::int64_t>(level));
      if (j == level) break;
    }
  }
  // Newton form to monomial basis, Horner from the top.
  std::vector<E> coeffs(n, field.zero());
  for (std::size_t j = n; j-- > 0;) {
    std::vector<E> next(n, field.zero());
    const E xj = field.from_int(static_cast<std::int64_t>(j));
    for (std::size_t i = 0; i + 1 < n; ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= coeffs[i] * xj;
    }
    next[0] += dd[j];
    coeffs = std::move(next);
  }
  return coeffs;
}

}  // namespace detail

/// All (r+1) x (r+1) minors of s*B1 + t*B2 as forms of degree r+1.
template <class F>
std::vector<BinaryForm<typename F::Elem>> pencil_minors(const Pencil<typename F::Elem>& p, std::size_t r,
                                                        const F& field) {
  using E = typename F::Elem;
  if (r < 1 || r >= std::min(p.a, p.b)) throw BadRank("rank bound must satisfy 1 <= r < min(a, b)");
  const std::size_t k = r + 1;
  const auto row_sets = detail::subsets(p.a, k);
  const auto col_sets = detail::subsets(p.b, k);
  std::vector<Matrix<E>> points;
  for (std::size_t j = 0; j <= k; ++j) {
    const E tj = field.from_int(static_cast<std::int64_t>(j));
    Matrix<E> m(p.a, p.b);
    for (std::size_t i = 0; i < p.a; ++i) {
      for (std::size_t c = 0; c < p.b; ++c) m(i, c) = p.b1(i, c) + tj * p.b2(i, c);
    }
    points.push_back(std::move(m));
  }
  std::vector<BinaryForm<E>> out;
  for (const auto& rows : row_sets) {
    for (const auto& cols : col_sets) {
      std::vector<E> values;
      for (const auto& m : points) {
        Matrix<E> sub(k, k);
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t c = 0; c < k; ++c) sub(i, c) = m(rows[i], cols[c]);
        }
        values.push_back(determinant(sub, field.one()));
      }
      out.emplace_back(detail::interpolate(values, field));
    }
  }
  return out;
}

/// Distinct points of P(span(B1, B2)) of rank <= r, or Infinite.
template <class F>
RootCount sigma_intersection_count(const Pencil<typename F::Elem>& p, std::size_t r, const F& field) {
  return distinct_root_count(form_gcd(pencil_minors(p, r, field)));
}

struct ZQuery {
  std::size_t a = 0, b = 0, r = 0;
  RootCount count;
  bool member = false;
  std::string note;
};

/// Member iff the pencil meets the rank-r locus in at least two distinct
/// points (or lies in it). A single point is reported with a tangency note.
template <class F>
ZQuery z_membership(const DenseTensor<typename F::Elem>& t, std::size_t r, const F& field) {
  const auto p = pencil_from_tensor(t);
  ZQuery q{p.a, p.b, r, sigma_intersection_count(p, r, field), false, {}};
  q.member = q.count.infinite || q.count.count >= 2;
  if (!q.count.infinite && q.count.count == 1)
    q.note = "tangency: the line meets the rank locus in a single point";
  return q;
}

/// Projective dimension 2r(a+b-r)+1 of the secant-line variety Z_{a,b,r}.
std::int64_t z_dim(std::int64_t a, std::int64_t b, std::int64_t r);

}  // namespace tnsdim
