#include "tnsdim/exactnum.hpp"

#include <array>

namespace tnsdim {

namespace {

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1U) result = Fp::mulmod(result, base, mod);
    base = Fp::mulmod(base, base, mod);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27U)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31U);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t b : kBases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = Fp::mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), engine_(splitmix64(seed ^ splitmix64(stream))) {}

std::uint64_t Rng::next_u64() {
  ++position_;
  return engine_();
}

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw Error("uniform_below: empty range");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
  std::uint64_t x = next_u64();
  while (x > limit) x = next_u64();
  return x % bound;
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == UINT64_MAX) return static_cast<std::int64_t>(next_u64());
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + uniform_below(span + 1));
}

Rng Rng::split(std::uint64_t index) const {
  return Rng(splitmix64(seed_ ^ splitmix64(stream_ + 0x632BE59BD9B4E019ULL)), index);
}

Fp Fp::inverse() const {
  if (v_ == 0 || p_ == 0) throw DivisionByZero();
  // Extended Euclid; p is prime so gcd(v, p) = 1.
  __int128 t = 0;
  __int128 new_t = 1;
  __int128 r = p_;
  __int128 new_r = v_;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return raw(static_cast<std::uint64_t>(t), p_);
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!is_prime_u64(p)) throw NotPrime(p);
}

Fp PrimeField::from_int(std::int64_t v) const {
  if (v >= 0) return Fp(static_cast<std::uint64_t>(v), p_);
  const std::uint64_t mag = static_cast<std::uint64_t>(-(v + 1)) + 1;
  return -Fp(mag, p_);
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZero();
  q_ = Big(num) / Big(den);
}

Rational Rational::inverse() const {
  if (q_ == 0) throw DivisionByZero();
  return Rational(Big(1) / q_);
}

std::string Rational::to_string() const {
  BigInt d = denominator();
  if (d == 1) return numerator().str();
  return numerator().str() + "/" + d.str();
}

Fp Rational::reduce(std::uint64_t p) const {
  auto residue = [p](const BigInt& x) {
    BigInt r = x % p;
    if (r < 0) r += p;
    return Fp(static_cast<std::uint64_t>(r), p);
  };
  Fp den = residue(denominator());
  if (den.is_zero()) throw DivisionByZero();
  return residue(numerator()) / den;
}

Rational RationalField::random(Rng& rng) const {
  std::int64_t num = rng.uniform_int(-range_, range_);
  std::int64_t den = rng.uniform_int(1, range_);
  return Rational(Rational::BigInt(num), Rational::BigInt(den));
}

}  // namespace tnsdim
