#ifndef TNF_FF_HPP
#define TNF_FF_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace tnf {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i64 = std::int64_t;

// Largest admissible prime: products of two residues must fit in 128 bits
// with headroom for accumulation.
inline constexpr u64 kMaxPrime = (u64{1} << 61);

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime_u64(u64 n);

// A verified prime modulus.
class Prime {
 public:
  explicit Prime(u64 value) : value_(value) {
    if (value >= kMaxPrime)
      throw std::invalid_argument("prime exceeds 2^61 cap: " + std::to_string(value));
    if (!is_prime_u64(value))
      throw std::invalid_argument("not a prime: " + std::to_string(value));
  }
  u64 value() const { return value_; }
  friend bool operator==(Prime a, Prime b) { return a.value_ == b.value_; }

 private:
  u64 value_;
};

// The prime field F_l with canonical residues in [0, l).
//
// For l < 2^32 multiplication uses a Barrett reciprocal (floor(2^64/l));
// above that it falls back to 128-bit division. All contexts are immutable
// and cheap to copy.
class Fp {
 public:
  using Element = u64;

  explicit Fp(Prime l) : p_(l.value()) {
    if (p_ < (u64{1} << 32)) barrett_ = ~u64{0} / p_;
  }

  u64 modulus() const { return p_; }
  u64 characteristic() const { return p_; }
  u64 order_u64() const { return p_; }
  unsigned ext_degree() const { return 1; }

  Element zero() const { return 0; }
  Element one() const { return 1 % p_; }
  bool is_zero(Element a) const { return a == 0; }

  Element from_int(i64 v) const {
    i64 r = v % static_cast<i64>(p_);
    return r < 0 ? static_cast<u64>(r + static_cast<i64>(p_)) : static_cast<u64>(r);
  }
  Element from_uint(u64 v) const { return v % p_; }

  Element add(Element a, Element b) const {
    u64 s = a + b;  // p < 2^61, no overflow
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }

  Element mul(Element a, Element b) const {
    if (barrett_) {
      u64 x = a * b;
      u64 q = static_cast<u64>((u128(x) * barrett_) >> 64);
      u64 r = x - q * p_;
      return r >= p_ ? r - p_ : r;
    }
    return static_cast<u64>(u128(a) * b % p_);
  }

  Element reduce_u128(u128 x) const { return static_cast<u64>(x % p_); }

  Element pow(Element a, u64 e) const {
    Element r = one(), b = a;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }

  Element inv(Element a) const {
    if (a == 0) throw std::invalid_argument("Fp::inv of zero");
    // extended Euclid; Bezout coefficients stay below p in magnitude
    i64 t = 0, tn = 1;
    i64 r = static_cast<i64>(p_), rn = static_cast<i64>(a);
    while (rn != 0) {
      i64 q = r / rn;
      i64 tmp = t - q * tn; t = tn; tn = tmp;
      tmp = r - q * rn; r = rn; rn = tmp;
    }
    return t < 0 ? static_cast<u64>(t + static_cast<i64>(p_)) : static_cast<u64>(t);
  }

  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  Element sample_uniform(std::mt19937_64& rng) const {
    u64 lim = ~u64{0} - ~u64{0} % p_;
    u64 v;
    do { v = rng(); } while (v >= lim);
    return v % p_;
  }
  u64 digest(Element e) const { return e; }

  friend bool operator==(const Fp& a, const Fp& b) { return a.p_ == b.p_; }

 private:
  u64 p_;
  u64 barrett_ = 0;
};

// Euler-criterion Legendre symbol (a/l) in {-1, 0, +1}; l must be odd.
int legendre_symbol(i64 a, Prime l);

// C(n, k) mod l for 0 <= k <= n < l. Rejects n >= l where the factorial
// method would be wrong.
u64 binomial_mod(u64 n, u64 k, Prime l);

}  // namespace tnf

#endif
