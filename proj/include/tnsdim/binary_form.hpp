#pragma once

// Homogeneous polynomials in (s, t): gcd and distinct projective root count.
// A degree-k form stores c_0..c_k for c_i * s^(k-i) * t^i.

#include <cassert>
#include <cstddef>
#include <string>
#include <algorithm>
#include <type_traits>
#include <vector>

#include "tnsdim/errors.hpp"
#include "tnsdim/exactnum.hpp"

namespace tnsdim {

/// Number of distinct points of P^1 (over the algebraic closure), or Infinite.
struct RootCount {
  bool infinite = false;
  std::size_t count = 0;

  static RootCount Infinite() { return {true, 0}; }
  static RootCount Finite(std::size_t n) { return {false, n}; }
  friend bool operator==(const RootCount&, const RootCount&) = default;
  std::string to_string() const { return infinite ? std::string("infinite") : std::to_string(count); }
};

namespace poly {

// Univariate helpers on ascending coefficient vectors a_0 + a_1 t + ...

template <class E>
void trim(std::vector<E>& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

template <class E>
std::vector<E> remainder(std::vector<E> a, const std::vector<E>& b) {
  trim(a);
  const E lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    const E f = a.back() * lead_inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

template <class E>
std::vector<E> quotient(std::vector<E> a, const std::vector<E>& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  std::vector<E> q(a.size() - b.size() + 1);
  const E lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    const E f = a.back() * lead_inv;
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return q;
}

/// Monic gcd; empty if both inputs are zero.
template <class E>
std::vector<E> gcd(std::vector<E> a, std::vector<E> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  const E inv = a.back().inverse();
  for (auto& x : a) x *= inv;
  return a;
}

template <class E>
std::vector<E> derivative(const std::vector<E>& a, const E& one) {
  std::vector<E> d;
  E k = one;
  for (std::size_t i = 1; i < a.size(); ++i) {
    d.push_back(a[i] * k);
    k += one;
  }
  trim(d);
  return d;
}

}  // namespace poly

template <class E>
class BinaryForm {
 public:
  /// The zero form.
  BinaryForm() = default;
  /// Degree coeffs.size()-1; collapses to the zero form if every entry is 0.
  explicit BinaryForm(std::vector<E> coeffs) : c_(std::move(coeffs)) {
    bool all_zero = true;
    for (const auto& x : c_) all_zero = all_zero && x.is_zero();
    if (all_zero) c_.clear();
  }

  bool is_zero() const { return c_.empty(); }
  /// Precondition: nonzero.
  std::size_t degree() const {
    assert(!is_zero());
    return c_.size() - 1;
  }
  const std::vector<E>& coeffs() const { return c_; }

  /// Largest a with s^a dividing the form (multiplicity of the root [0:1]).
  std::size_t s_power() const {
    std::size_t a = 0;
    while (a < c_.size() && c_[c_.size() - 1 - a].is_zero()) ++a;
    return a;
  }

  /// f(1, t) as an ascending coefficient vector, trailing zeros removed.
  std::vector<E> dehomogenized() const {
    std::vector<E> g = c_;
    poly::trim(g);
    return g;
  }

  /// s^extra * s^deg(g) * g(t/s).
  static BinaryForm homogenize(std::vector<E> g, std::size_t extra) {
    poly::trim(g);
    if (g.empty()) return {};
    g.resize(g.size() + extra);
    return BinaryForm(std::move(g));
  }

  /// f(s, t); the zero form evaluates to an unbound zero.
  E evaluate(const E& s, const E& t) const {
    if (c_.empty()) return E{};
    E h = c_[0];
    E tpow = t;
    for (std::size_t i = 1; i < c_.size(); ++i) {
      h = h * s + c_[i] * tpow;
      tpow *= t;
    }
    return h;
  }

  /// Scales so the first nonzero coefficient (highest power of s) is 1.
  BinaryForm normalized() const {
    if (is_zero()) return {};
    std::size_t i = 0;
    while (c_[i].is_zero()) ++i;
    const E inv = c_[i].inverse();
    std::vector<E> out = c_;
    for (auto& x : out) x *= inv;
    return BinaryForm(std::move(out));
  }

  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<E> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return BinaryForm(std::move(out));
  }

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.c_ == b.c_; }

 private:
  std::vector<E> c_;
};

/// Normalized gcd of all nonzero forms; the zero form if every input is zero.
template <class E>
BinaryForm<E> form_gcd(const std::vector<BinaryForm<E>>& forms) {
  if (forms.empty()) throw Error("form_gcd: empty list");
  bool any = false;
  std::size_t s_pow = 0;
  std::vector<E> g;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    if (!any) {
      s_pow = f.s_power();
      g = poly::gcd(f.dehomogenized(), std::vector<E>{});
      any = true;
    } else {
      s_pow = std::min(s_pow, f.s_power());
      g = poly::gcd(g, f.dehomogenized());
    }
  }
  if (!any) return {};
  return BinaryForm<E>::homogenize(std::move(g), s_pow).normalized();
}

/// Degree of the squarefree part: distinct projective roots over the closure.
template <class E>
RootCount distinct_root_count(const BinaryForm<E>& f) {
  if (f.is_zero()) return RootCount::Infinite();
  const std::vector<E> g = f.dehomogenized();
  if constexpr (std::is_same_v<E, Fp>) {
    // Squarefree-by-derivative needs deg < p.
    assert(g.size() < g.back().modulus());
  }
  std::size_t count = f.s_power() > 0 ? 1 : 0;
  if (g.size() > 1) {
    const E one = g.back() / g.back();
    const auto common = poly::gcd(g, poly::derivative(g, one));
    count += (g.size() - 1) - (common.size() - 1);
  }
  return RootCount::Finite(count);
}

}  // namespace tnsdim
