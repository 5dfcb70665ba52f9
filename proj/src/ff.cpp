#include "tnf/ff.hpp"

namespace tnf {

namespace {

u64 mulmod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod_u64(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
    if (n % q == 0) return n == q;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  // this base set is a proven deterministic witness set for n < 3.3 * 10^24
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 v = powmod_u64(a, d, n);
    if (v == 1 || v == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      v = mulmod_u64(v, v, n);
      if (v == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

int legendre_symbol(i64 a, Prime l) {
  if (l.value() == 2) throw std::invalid_argument("legendre_symbol: l must be odd");
  Fp K(l);
  u64 r = K.pow(K.from_int(a), (l.value() - 1) / 2);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

u64 binomial_mod(u64 n, u64 k, Prime l) {
  if (n >= l.value())
    throw std::invalid_argument("binomial_mod: n must be < l");
  if (k > n) return 0;
  Fp K(l);
  if (k > n - k) k = n - k;
  u64 num = 1, den = 1;
  for (u64 i = 1; i <= k; ++i) {
    num = K.mul(num, K.from_uint(n - k + i));
    den = K.mul(den, K.from_uint(i));
  }
  return K.div(num, den);
}

}  // namespace tnf
