#pragma once

// Exact scalars: residues modulo a 64-bit prime and arbitrary-precision
// rationals, plus the seeded random source every computation draws from.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <string>

#include "tnsdim/errors.hpp"

namespace tnsdim {

/// 2^61 - 1.
inline constexpr std::uint64_t kDefaultPrime = 2305843009213693951ULL;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

/// Seeded random source. Same (seed, stream) gives the same draws on every
/// platform: mt19937_64 is fully specified and the range reduction below is
/// our own.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();
  /// Uniform in [0, bound). bound must be nonzero.
  std::uint64_t uniform_below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  /// Independent child stream keyed by (seed, stream, index); does not
  /// depend on how many values this generator has produced.
  [[nodiscard]] Rng split(std::uint64_t index) const;

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }
  std::uint64_t position() const { return position_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t position_ = 0;
  std::mt19937_64 engine_;
};

/// Residue modulo a prime. Carries its modulus; a default-constructed value
/// is an unbound zero that adopts the modulus of whatever it meets.
class Fp {
 public:
  Fp() = default;
  Fp(std::uint64_t value, std::uint64_t modulus) : v_(value % modulus), p_(modulus) {}

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp inverse() const;

  friend Fp operator+(Fp a, Fp b) {
    std::uint64_t p = a.p_ ? a.p_ : b.p_;
    std::uint64_t s = a.v_ + b.v_;
    if (s >= p && p != 0) s -= p;
    return raw(s, p);
  }
  friend Fp operator-(Fp a, Fp b) {
    std::uint64_t p = a.p_ ? a.p_ : b.p_;
    return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + (p - b.v_), p);
  }
  friend Fp operator-(Fp a) { return raw(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_); }
  friend Fp operator*(Fp a, Fp b) {
    std::uint64_t p = a.p_ ? a.p_ : b.p_;
    if (a.v_ == 0 || b.v_ == 0) return raw(0, p);
    return raw(mulmod(a.v_, b.v_, p), p);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  Fp& operator/=(Fp b) { return *this = *this / b; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }

  std::string to_string() const { return std::to_string(v_); }

  static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
    if (p == kDefaultPrime) {
      std::uint64_t lo = static_cast<std::uint64_t>(prod & kDefaultPrime);
      std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
      std::uint64_t s = lo + hi;
      s = (s & kDefaultPrime) + (s >> 61);
      return s >= kDefaultPrime ? s - kDefaultPrime : s;
    }
    return static_cast<std::uint64_t>(prod % p);
  }

 private:
  static Fp raw(std::uint64_t v, std::uint64_t p) {
    Fp r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }

  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

/// Field context for the prime backend.
class PrimeField {
 public:
  using Elem = Fp;

  /// Throws NotPrime.
  explicit PrimeField(std::uint64_t p = kDefaultPrime);

  Elem zero() const { return Fp(0, p_); }
  Elem one() const { return Fp(1, p_); }
  Elem from_int(std::int64_t v) const;
  /// Uniform over F_p.
  Elem random(Rng& rng) const { return Fp(rng.uniform_below(p_), p_); }

  std::uint64_t prime() const { return p_; }
  std::string name() const { return "prime"; }

 private:
  std::uint64_t p_;
};

/// Exact rational in lowest terms with positive denominator.
class Rational {
 public:
  using Big = boost::multiprecision::cpp_rational;
  using BigInt = boost::multiprecision::cpp_int;

  Rational() = default;
  Rational(std::int64_t v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(Big q) : q_(std::move(q)) {}

  const Big& value() const { return q_; }
  BigInt numerator() const { return boost::multiprecision::numerator(q_); }
  BigInt denominator() const { return boost::multiprecision::denominator(q_); }
  bool is_zero() const { return q_ == 0; }
  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(Big(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(Big(a.q_ - b.q_)); }
  friend Rational operator-(const Rational& a) { return Rational(Big(-a.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(Big(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }

  /// "n" or "n/d".
  std::string to_string() const;

  /// Image in F_p; throws DivisionByZero if p divides the denominator.
  Fp reduce(std::uint64_t p) const;

 private:
  Big q_{0};
};

/// Field context for the rational backend. Random elements have numerator
/// uniform in [-range, range] and denominator uniform in [1, range].
class RationalField {
 public:
  using Elem = Rational;

  explicit RationalField(std::int64_t range = 1000) : range_(range) {}

  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  Elem from_int(std::int64_t v) const { return Rational(v); }
  Elem random(Rng& rng) const;

  std::int64_t range() const { return range_; }
  std::string name() const { return "rational"; }

 private:
  std::int64_t range_;
};

inline std::string to_string(const Fp& x) { return x.to_string(); }
inline std::string to_string(const Rational& x) { return x.to_string(); }

}  // namespace tnsdim
