#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tnf/tate_hasse.hpp"

using namespace tnf;

// Second hand-entered copy of every printed coefficient list, compared
// against the library's embedded data to guard transcription.
TEST_CASE("coefficient tables against an independently typed copy") {
  Fp K(Prime(1000003));
  E5Data d = e5_data(K);
  CHECK(d.f0 == poly_from_ints(K, {1, -12, 14, 12, 1}));
  CHECK(d.f1728 == poly_from_ints(K, {1, -18, 74, 18, 1}));
  CHECK(d.g0 == poly_from_ints(K, {1, 228, 494, -228, 1}));
  CHECK(d.g1728 == poly_from_ints(K, {1, -522, -10006, 522, 1}));
  CHECK(d.cusp == poly_from_ints(K, {1, -11, -1}));
  CHECK(d.delta == poly_from_ints(K, {0, 0, 0, 0, 0, 1, -11, -1}));
  CHECK(d.delta5 == poly_from_ints(K, {0, 1, -55, 1205, -13090, 69585, -134761, -69585,
                                       -13090, -1205, -55, -1}));
  E7Data e = e7_data(K);
  CHECK(e.c2 == poly_from_ints(K, {1, -1, 1}));
  CHECK(e.f1 == poly_from_ints(K, {1, 5, -10, -15, 30, -11, 1}));
  CHECK(e.f2 == poly_from_ints(K, {1, 6, -15, -46, 174, -222, 273, -486, 570, -354, 117, -18, 1}));
  CHECK(e.f3 == poly_from_ints(K, {1, 5, -8, 1}));
}

TEST_CASE("compose_J anchors") {
  // n = 0: prefactor times the constant J
  {
    Fp K(Prime(7));
    RationalSubstitution s = e5_substitution(K, 1);
    Poly<Fp> out = compose_J(Prime(7), s);
    CHECK(out.degree() == 0);  // J_7 is constant, prefactor = 1
  }
  // l = 13: J = t - 5, so the composition is N - 5 D
  {
    Fp K(Prime(13));
    RationalSubstitution s = e5_substitution(K, 1);
    Poly<Fp> want = sub(K, s.num, mul_scalar(K, s.den, K.from_uint(5)));
    CHECK(compose_J(Prime(13), s) == want);
  }
  // degree = deg(prefactor) + 12 n for both E5 substitutions
  for (u64 l : {19ull, 31ull, 103ull}) {
    for (int rep : {1, 2}) {
      Fp K{Prime(l)};
      RationalSubstitution s = e5_substitution(K, rep);
      CHECK(compose_J(Prime(l), s).degree() ==
            s.prefactor.degree() + 12 * static_cast<int>(l / 12));
    }
  }
}

TEST_CASE("build_H5 anchors") {
  // l = 7 (r=0, s=1, n=0): (b^2+1)(b^4+4b^3+4b^2+3b+1)
  {
    Fp K(Prime(7));
    auto H = build_H5(Prime(7), 1);
    Poly<Fp> want = mul(K, poly_from_ints(K, {1, 0, 1}), poly_from_ints(K, {1, 3, 4, 4, 1}));
    CHECK(H.poly == want);
  }
  // l = 11 (r=s=1, n=0): f0 (b^2+1) f1728
  {
    Fp K(Prime(11));
    auto H = build_H5(Prime(11), 1);
    E5Data d = e5_data(K);
    CHECK(H.poly == mul(K, d.f0, mul(K, d.x2p1, d.f1728)));
  }
  // l = 19 (r=0, s=1, n=1): degree 4r+6s+12n = 18 = l-1
  {
    auto H = build_H5(Prime(19), 1);
    CHECK(H.poly.degree() == 18);
    CHECK(H.fac.distinct_of_degree(1) == 8);  // Thm 1.1 anchor
  }
  CHECK_THROWS_AS(build_H5(Prime(5)), std::invalid_argument);
}

TEST_CASE("build_H7 anchors") {
  {
    Fp K(Prime(5));
    auto H = build_H7(Prime(5));
    E7Data d = e7_data(K);
    CHECK(H.poly == mul(K, d.c2, d.f1));  // r=1, s=0, n=0
  }
  CHECK(build_H7(Prime(13)).poly.degree() == 24);  // r=s=0, n=1
  {
    Fp K(Prime(11));
    auto H = build_H7(Prime(11));
    E7Data d = e7_data(K);
    CHECK(H.poly == mul(K, mul(K, d.c2, d.f1), d.f2));  // r=s=1, n=0
  }
  CHECK_THROWS_AS(build_H7(Prime(7)), std::invalid_argument);
  CHECK_THROWS_AS(build_H7(Prime(2)), std::invalid_argument);
  CHECK_THROWS_AS(build_H7(Prime(3)), std::invalid_argument);
}

TEST_CASE("Hasse degrees follow the exponent formulas") {
  for (u64 l = 7; l <= 200; ++l) {
    if (!is_prime_u64(l)) continue;
    auto e = j_exponents(Prime(l));
    auto H5 = build_H5(Prime(l), 1);
    CHECK(H5.poly.degree() == 4 * e.r + 6 * e.s + 12 * static_cast<int>(e.n));
    CHECK(H5.poly.degree() == static_cast<int>(l) - 1);
    if (l != 7) {
      auto H7 = build_H7(Prime(l));
      CHECK(H7.poly.degree() == 8 * e.r + 12 * e.s + 24 * static_cast<int>(e.n));
      CHECK(H7.poly.degree() == 2 * (static_cast<int>(l) - 1));
    }
  }
}

TEST_CASE("structured factorization agrees with the generic factorizer") {
  for (u64 l : {19ull, 29ull, 41ull, 59ull}) {
    Fp K{Prime(l)};
    auto H = build_H5(Prime(l), 1);
    auto direct = factor(K, H.poly);
    CHECK(direct.factors == H.fac.factors);
    CHECK(direct.unit == H.fac.unit);
  }
  {
    Fp K{Prime(23)};
    auto H = build_H7(Prime(23));
    auto direct = factor(K, H.poly);
    CHECK(direct.factors == H.fac.factors);
  }
}

TEST_CASE("the two E5 representations agree up to a scalar") {
  for (u64 l = 7; l <= 200; ++l) {
    if (!is_prime_u64(l)) continue;
    Fp K{Prime(l)};
    auto a = build_H5(Prime(l), 1);
    auto b = build_H5(Prime(l), 2);
    REQUIRE(a.poly.degree() == b.poly.degree());
    CHECK(mul_scalar(K, a.poly, b.poly.lc()) == mul_scalar(K, b.poly, a.poly.lc()));
    CHECK(squarefree_part(K, a.poly) == squarefree_part(K, b.poly));
  }
}

TEST_CASE("factor degrees of H5 are 1, 2 or 4, split by residue class mod 5") {
  for (u64 l = 7; l <= 300; ++l) {
    if (!is_prime_u64(l)) continue;
    auto H = build_H5(Prime(l), 1);
    bool has_linear = false, has_quartic = false;
    for (const auto& [f, m] : H.fac.factors) {
      int d = f.degree();
      CHECK((d == 1 || d == 2 || d == 4));
      has_linear |= d == 1;
      has_quartic |= d == 4;
    }
    if (has_linear) CHECK(l % 5 == 4);
    if (has_quartic) CHECK((l % 5 == 2 || l % 5 == 3));
  }
}

TEST_CASE("no repeated factors; cusp values never supersingular") {
  for (u64 l = 7; l <= 200; ++l) {
    if (!is_prime_u64(l)) continue;
    Fp K{Prime(l)};
    auto H = build_H5(Prime(l), 1);
    for (const auto& [f, m] : H.fac.factors) CHECK(m == 1);
    E5Data d = e5_data(K);
    Poly<Fp> cusps = mul(K, mul(K, d.delta, d.delta5),
                         mul(K, poly_x(K), poly_from_ints(K, {-1, 11, 1})));
    CHECK(gcd(K, H.poly, cusps).degree() == 0);
  }
}

TEST_CASE("f_j and G_j basics") {
  Fp K(Prime(19));
  E5Data d = e5_data(K);
  CHECK(build_fj(K, 0) == pow_poly(K, d.f0, 3));
  CHECK(build_Gj(K, 0) == pow_poly(K, d.g0, 3));
  // f_j(0) = 1 for any j and l
  for (u64 j : {0ull, 5ull, 18ull}) CHECK(eval(K, build_fj(K, j), 0) == 1);
  // l = 19, j = 18 = 1728 mod 19 is supersingular: 4 distinct roots (via f_1728)
  CHECK(roots_in_base(K, d.f1728).size() == 4);
  // G(x, 1728) = g1728^2 (x^2+1)^2
  CHECK(build_Gj(K, K.from_uint(1728)) ==
        mul(K, pow_poly(K, d.g1728, 2), pow_poly(K, d.x2p1, 2)));
}

TEST_CASE("roots of G(x,j) biject with roots of f_j for l = 4 mod 5") {
  for (u64 l : {19ull, 29ull}) {
    Fp K{Prime(l)};
    auto ss = build_ss(Prime(l));
    for (u64 j : ss.base_roots) {
      if (j == 0 || j == K.from_uint(1728)) continue;
      CHECK(roots_in_base(K, build_fj(K, j)).size() ==
            roots_in_base(K, build_Gj(K, j)).size());
    }
  }
}

TEST_CASE("identity suite passes at assorted primes") {
  for (u64 l : {101ull, 103ull, 107ull, 109ull, 1009ull, 65537ull}) {
    auto rep = identity_suite(Prime(l), 25, 7);
    for (const auto& c : rep.checks) {
      INFO(l, " ", c.name, " ", c.detail);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("identity suite spec anchors at l = 101") {
  Fp K(Prime(101));
  E5Data d = e5_data(K);
  CHECK(resultant(K, d.g0, d.cusp) == K.from_uint(9765625));  // 5^10 mod 101
  CHECK(discriminant(K, d.f1728) == K.from_uint(2592000));    // 2^8 3^4 5^3 mod 101
  // disc_x G(x,1) = 5^145 (1-1728)^6 mod 101
  u64 want = K.mul(K.pow(5, 145), K.pow(K.sub(K.one(), K.from_uint(1728)), 6));
  CHECK(discriminant(K, build_Gj(K, 1)) == want);
}
