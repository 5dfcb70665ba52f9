#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tnf/ff.hpp"

using namespace tnf;

TEST_CASE("primality") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(3));
  CHECK(is_prime_u64(65537));
  CHECK(is_prime_u64((u64{1} << 61) - 1));  // Mersenne
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(561));      // Carmichael
  CHECK_FALSE(is_prime_u64(3215031751ull));
  CHECK_THROWS_AS(Prime(91), std::invalid_argument);
  CHECK_THROWS_AS(Prime(u64{1} << 62), std::invalid_argument);
}

TEST_CASE("field arithmetic basics") {
  Fp K(Prime(19));
  CHECK(K.from_int(-1) == 18);
  CHECK(K.add(10, 15) == 6);
  CHECK(K.sub(3, 7) == 15);
  CHECK(K.mul(7, 11) == 77 % 19);
  CHECK(K.mul(K.inv(5), 5) == 1);
  CHECK(K.pow(2, 18) == 1);  // Fermat
  CHECK_THROWS_AS(K.inv(0), std::invalid_argument);
}

TEST_CASE("mulmod agrees with 128-bit reference across sizes") {
  for (u64 p : {2ull, 3ull, 101ull, 4294967291ull, 2305843009213693951ull}) {
    Fp K{Prime(p)};
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
      u64 a = rng() % p, b = rng() % p;
      CHECK(K.mul(a, b) == static_cast<u64>(u128(a) * b % p));
    }
  }
}

TEST_CASE("legendre symbol examples") {
  CHECK(legendre_symbol(0, Prime(7)) == 0);
  CHECK(legendre_symbol(-1, Prime(19)) == -1);
  CHECK(legendre_symbol(5, Prime(11)) == 1);  // 4^2 = 16 = 5 mod 11
  CHECK_THROWS_AS(legendre_symbol(3, Prime(2)), std::invalid_argument);
}

TEST_CASE("legendre symbol against the brute-force squares oracle") {
  for (u64 l = 3; l <= 200; ++l) {
    if (!is_prime_u64(l)) continue;
    Prime p(l);
    std::vector<bool> is_square(l, false);
    for (u64 a = 0; a < l; ++a) is_square[a * a % l] = true;
    for (u64 a = 0; a < l; ++a) {
      int want = a == 0 ? 0 : (is_square[a] ? 1 : -1);
      CHECK(legendre_symbol(static_cast<i64>(a), p) == want);
    }
  }
}

TEST_CASE("binomial examples and rejection") {
  CHECK(binomial_mod(4, 2, Prime(7)) == 6);
  CHECK(binomial_mod(2, 1, Prime(13)) == 2);
  CHECK(binomial_mod(3, 1, Prime(23)) == 3);
  CHECK(binomial_mod(5, 7, Prime(11)) == 0);  // k > n
  CHECK_THROWS_AS(binomial_mod(7, 2, Prime(7)), std::invalid_argument);
  // Pascal recurrence as oracle
  Prime p(101);
  Fp K(p);
  for (u64 n = 1; n < 40; ++n)
    for (u64 k = 1; k < n; ++k)
      CHECK(binomial_mod(n, k, p) ==
            K.add(binomial_mod(n - 1, k - 1, p), binomial_mod(n - 1, k, p)));
}
