#include "tnf/tate_hasse.hpp"

#include <sstream>

namespace tnf {

namespace {

const std::vector<long long> kF0{1, -12, 14, 12, 1};
const std::vector<long long> kF1728{1, -18, 74, 18, 1};
const std::vector<long long> kG0{1, 228, 494, -228, 1};
const std::vector<long long> kG1728{1, -522, -10006, 522, 1};
const std::vector<long long> kCusp{1, -11, -1};  // 1 - 11x - x^2
const std::vector<long long> kE7C2{1, -1, 1};
const std::vector<long long> kE7F1{1, 5, -10, -15, 30, -11, 1};
const std::vector<long long> kE7F2{1, 6, -15, -46, 174, -222, 273, -486, 570, -354, 117, -18, 1};
const std::vector<long long> kE7F3{1, 5, -8, 1};

}  // namespace

E5Data e5_data(const Fp& K) {
  E5Data d;
  d.f0 = poly_from_ints(K, kF0);
  d.f1728 = poly_from_ints(K, kF1728);
  d.g0 = poly_from_ints(K, kG0);
  d.g1728 = poly_from_ints(K, kG1728);
  d.x2p1 = poly_from_ints(K, {1, 0, 1});
  d.cusp = poly_from_ints(K, kCusp);
  Poly<Fp> x5 = make_poly(K, {0, 0, 0, 0, 0, K.one()});
  d.delta = mul(K, x5, d.cusp);
  d.delta5 = mul(K, poly_x(K), pow_poly(K, d.cusp, 5));
  return d;
}

E7Data e7_data(const Fp& K) {
  return {poly_from_ints(K, kE7C2), poly_from_ints(K, kE7F1), poly_from_ints(K, kE7F2),
          poly_from_ints(K, kE7F3)};
}

RationalSubstitution e5_substitution(const Fp& K, int rep) {
  if (rep != 1 && rep != 2) throw std::invalid_argument("e5_substitution: rep must be 1 or 2");
  E5Data d = e5_data(K);
  RationalSubstitution sub;
  if (rep == 1) {
    sub.num = pow_poly(K, d.f0, 3);
    sub.den = d.delta;
  } else {
    sub.num = pow_poly(K, d.g0, 3);
    sub.den = d.delta5;
  }
  sub.prefactor = poly_one<Fp>(K);
  if (gcd(K, sub.num, sub.den).degree() != 0)
    throw std::logic_error("e5_substitution: num/den not coprime mod l");
  return sub;
}

RationalSubstitution e7_substitution(const Fp& K) {
  E7Data d = e7_data(K);
  RationalSubstitution sub;
  sub.num = pow_poly(K, mul(K, d.c2, d.f1), 3);
  std::vector<u64> x7c(8, 0);
  x7c[7] = K.one();
  Poly<Fp> x7 = make_poly(K, std::move(x7c));
  sub.den = mul(K, mul(K, x7, pow_poly(K, poly_from_ints(K, {-1, 1}), 7)), d.f3);
  sub.prefactor = poly_one<Fp>(K);
  if (gcd(K, sub.num, sub.den).degree() != 0)
    throw std::logic_error("e7_substitution: num/den not coprime mod l");
  return sub;
}

Poly<Fp> compose_J(Prime l, const RationalSubstitution& sub) {
  Fp K(l);
  Poly<Fp> J = build_J(l);
  return mul(K, sub.prefactor, subst_rational(K, J, sub.num, sub.den));
}

namespace {

// Factor the composition through its structure: each irreducible factor P
// of J_l maps to the cleared image den^{deg P} P(num/den), and those images
// are pairwise coprime since gcd(num, den) = 1. The merged factorization is
// verified against the expanded polynomial before returning.
Factorization<Fp> structured_factorization(
    const Fp& K, const RationalSubstitution& sub, const Poly<Fp>& J,
    const std::vector<std::pair<const Poly<Fp>*, unsigned>>& prefactors, u64 seed) {
  Factorization<Fp> fac{K.one(), {}};
  for (const auto& [p, m] : prefactors)
    if (m) fac.merge_with(K, factor(K, *p, seed), m);
  Factorization<Fp> jf = factor(K, J, seed);
  fac.unit = K.mul(fac.unit, jf.unit);
  for (const auto& [P, e] : jf.factors) {
    Poly<Fp> piece = subst_rational(K, P, sub.num, sub.den);
    fac.merge_with(K, factor(K, piece, seed), e);
  }
  return fac;
}

}  // namespace

HasseInvariant build_H5(Prime l, int rep, u64 seed) {
  if (l.value() <= 5) throw std::invalid_argument("build_H5: l > 5 required");
  Fp K(l);
  auto e = j_exponents(l);
  E5Data d = e5_data(K);
  RationalSubstitution sub = e5_substitution(K, rep);
  Poly<Fp> J = build_J(l);

  const Poly<Fp>& q0 = rep == 1 ? d.f0 : d.g0;
  const Poly<Fp>& q1728 = rep == 1 ? d.f1728 : d.g1728;
  Poly<Fp> H = subst_rational(K, J, sub.num, sub.den);
  if (e.r) H = mul(K, H, q0);
  if (e.s) H = mul(K, H, mul(K, d.x2p1, q1728));

  int want = 4 * e.r + 6 * e.s + 12 * static_cast<int>(e.n);
  if (H.degree() != want) throw std::logic_error("build_H5: unexpected degree");

  auto fac = structured_factorization(
      K, sub, J,
      {{&q0, static_cast<unsigned>(e.r)},
       {&d.x2p1, static_cast<unsigned>(e.s)},
       {&q1728, static_cast<unsigned>(e.s)}},
      seed);
  if (fac.reconstruct(K) != H)
    throw std::logic_error("build_H5: factorization does not reconstruct the polynomial");
  return {rep == 1 ? CurveTag::E5Rep1 : CurveTag::E5Rep2, l, e, std::move(H), std::move(fac)};
}

HasseInvariant build_H7(Prime l, u64 seed) {
  u64 lv = l.value();
  if (lv == 2 || lv == 3 || lv == 7)
    throw std::invalid_argument("build_H7: l in {2,3,7} not admissible");
  Fp K(l);
  auto e = j_exponents(l);
  E7Data d = e7_data(K);
  RationalSubstitution sub = e7_substitution(K);
  Poly<Fp> J = build_J(l);

  Poly<Fp> H = subst_rational(K, J, sub.num, sub.den);
  if (e.r) H = mul(K, H, mul(K, d.c2, d.f1));
  if (e.s) H = mul(K, H, d.f2);

  int want = 8 * e.r + 12 * e.s + 24 * static_cast<int>(e.n);
  if (H.degree() != want) throw std::logic_error("build_H7: unexpected degree");

  auto fac = structured_factorization(
      K, sub, J,
      {{&d.c2, static_cast<unsigned>(e.r)},
       {&d.f1, static_cast<unsigned>(e.r)},
       {&d.f2, static_cast<unsigned>(e.s)}},
      seed);
  if (fac.reconstruct(K) != H)
    throw std::logic_error("build_H7: factorization does not reconstruct the polynomial");
  return {CurveTag::E7, l, e, std::move(H), std::move(fac)};
}

Poly<Fp> build_fj(const Fp& K, u64 j) {
  E5Data d = e5_data(K);
  return sub(K, pow_poly(K, d.f0, 3), mul_scalar(K, d.delta, K.from_uint(j)));
}

Poly<Fp> build_Gj(const Fp& K, u64 j) {
  E5Data d = e5_data(K);
  return sub(K, pow_poly(K, d.g0, 3), mul_scalar(K, d.delta5, K.from_uint(j)));
}

std::optional<std::pair<u64, u64>> sqrt5_mod(const Fp& K) {
  auto roots = roots_in_base(K, poly_from_ints(K, {-5, 0, 1}));
  if (roots.empty()) return std::nullopt;
  return std::make_pair(roots[0], roots[roots.size() - 1]);
}

// ---------------- identity suite ----------------

namespace {

template <class F>
std::string elem_str(const F&, u64 e) {
  return std::to_string(e);
}
std::string elem_str(const Fq&, const Fq::Element& e) {
  std::string s = "[";
  for (size_t i = 0; i < e.size(); ++i) s += (i ? " " : "") + std::to_string(e[i]);
  return s + "]";
}

void push(std::vector<IdentityCheck>& out, const std::string& name, bool pass,
          std::string detail = "") {
  out.push_back({name, pass, std::move(detail)});
}

// identities that live over Q(sqrt 5): run with both square roots
template <class F>
void sqrt5_block(const F& K, const typename F::Element& s5, const std::string& tag,
                 std::vector<IdentityCheck>& out, std::mt19937_64& rng, unsigned points) {
  using E = typename F::Element;
  const E half = K.inv(K.from_int(2));
  const E one = K.one();

  Poly<F> f0 = poly_from_ints(K, kF0);
  Poly<F> f1728 = poly_from_ints(K, kF1728);
  Poly<F> g0 = poly_from_ints(K, kG0);
  Poly<F> g1728 = poly_from_ints(K, kG1728);
  Poly<F> cusp = poly_from_ints(K, kCusp);
  Poly<F> x5 = make_poly(K, std::vector<E>{K.zero(), K.zero(), K.zero(), K.zero(), K.zero(), one});
  Poly<F> delta = mul(K, x5, cusp);
  Poly<F> delta5 = mul(K, poly_x(K), pow_poly(K, cusp, 5));

  // quadratic splittings over Q(sqrt 5)
  auto qsplit = [&](const Poly<F>& target, const E& mid_plus, const E& mid_minus) {
    Poly<F> a = make_poly(K, std::vector<E>{K.neg(one), mid_plus, one});
    Poly<F> b = make_poly(K, std::vector<E>{K.neg(one), mid_minus, one});
    return mul(K, a, b) == target;
  };
  auto lin = [&](long long c0, long long c1) {  // c0 + c1*sqrt5
    return K.add(K.from_int(c0), K.mul(K.from_int(c1), s5));
  };
  push(out, tag + "split_f0", qsplit(f0, lin(6, 2), lin(6, -2)));
  push(out, tag + "split_f1728", qsplit(f1728, lin(9, 1), lin(9, -1)));
  push(out, tag + "split_g0", qsplit(g0, lin(-114, -50), lin(-114, 50)));
  push(out, tag + "split_g1728", qsplit(g1728, lin(261, 125), lin(261, -125)));
  push(out, tag + "split_quartic22",
       qsplit(poly_from_ints(K, {1, -22, -6, 22, 1}), lin(11, 5), lin(11, -5)));

  for (int sign = 0; sign < 2; ++sign) {
    E root = sign ? K.neg(s5) : s5;
    E eps5 = K.mul(K.add(K.from_int(-11), K.mul(K.from_int(5), root)), half);
    E eps10 = K.mul(eps5, eps5);
    E eps30 = K.mul(eps10, K.mul(eps10, eps10));
    std::string t2 = tag + (sign ? "conj_" : "");

    // det tau = -1 - eps^10 = -5 sqrt5 eps^5
    E det = K.sub(K.neg(one), eps10);
    E want_det = K.neg(K.mul(K.mul(K.from_int(5), root), eps5));
    push(out, t2 + "tau_det", K.is_zero(K.sub(det, want_det)));

    // (eps5 x + 1)^4 f0(tau) = 5 eps10 g0
    Poly<F> lhs = mobius_weighted(K, f0, K.neg(one), eps5, eps5, one);
    Poly<F> rhs = mul_scalar(K, g0, K.mul(K.from_int(5), eps10));
    push(out, t2 + "mobius_f0", lhs == rhs);

    // (eps5 x + 1)^12 Delta(tau) = 125 eps30 Delta5
    Poly<F> lhsD = subst_rational(K, delta,
                                  make_poly(K, std::vector<E>{eps5, K.neg(one)}),
                                  make_poly(K, std::vector<E>{one, eps5}));
    // delta has degree 7, the weight must be 12: multiply by (eps5 x + 1)^5
    lhsD = mul(K, lhsD, pow_poly(K, make_poly(K, std::vector<E>{one, eps5}), 5));
    Poly<F> rhsD = mul_scalar(K, delta5, K.mul(K.from_int(125), eps30));
    push(out, t2 + "mobius_delta", lhsD == rhsD);

    // (eps5 x + 1)^12 F(tau, j) = 5^3 eps30 G(x, j) at random j
    bool okFG = true;
    std::string wit;
    for (unsigned i = 0; i < points && okFG; ++i) {
      E j = K.sample_uniform(rng);
      Poly<F> Fj = sub(K, pow_poly(K, f0, 3), mul_scalar(K, delta, j));
      Poly<F> Gj = sub(K, pow_poly(K, g0, 3), mul_scalar(K, delta5, j));
      Poly<F> L = mobius_weighted(K, Fj, K.neg(one), eps5, eps5, one);
      Poly<F> R = mul_scalar(K, Gj, K.mul(K.from_int(125), eps30));
      if (L != R) {
        okFG = false;
        wit = "j=" + elem_str(K, j);
      }
    }
    push(out, t2 + "mobius_F_G", okFG, wit);

    // (2x+1+sqrt5)^60 G(T(x)^5, j) = 2^60 ((5+sqrt5)/2)^30 G(x^5, j)
    bool okT = true;
    std::string witT;
    Poly<F> tnum = make_poly(K, std::vector<E>{K.from_int(2), K.neg(K.add(one, root))});
    Poly<F> tden = make_poly(K, std::vector<E>{K.add(one, root), K.from_int(2)});
    Poly<F> tnum5 = pow_poly(K, tnum, 5), tden5 = pow_poly(K, tden, 5);
    E c30 = K.pow(K.mul(K.add(K.from_int(5), root), half), 30);
    E scale = K.mul(K.pow(K.from_int(2), 60), c30);
    for (unsigned i = 0; i < points && okT; ++i) {
      E j = K.sample_uniform(rng);
      Poly<F> Gj = sub(K, pow_poly(K, g0, 3), mul_scalar(K, delta5, j));
      Poly<F> L = subst_rational(K, Gj, tnum5, tden5);
      // G(x^5, j): spread coefficients to indices 5i
      std::vector<E> spread(5 * Gj.c.size() - 4, K.zero());
      for (size_t k = 0; k < Gj.c.size(); ++k) spread[5 * k] = Gj.c[k];
      Poly<F> R = mul_scalar(K, make_poly(K, std::move(spread)), scale);
      if (L != R) {
        okT = false;
        witT = "j=" + elem_str(K, j);
      }
    }
    push(out, t2 + "G_T_covariance", okT, witT);
  }
}

// j_5(z) = (1+228 z^5+494 z^10-228 z^15+z^20)^3 / (z^5 (1-11 z^5-z^10)^5),
// as a pair (num, den) evaluated at a point
template <class F>
std::pair<typename F::Element, typename F::Element> j5_eval(const F& K,
                                                            const typename F::Element& z) {
  using E = typename F::Element;
  E z5 = K.pow(z, 5);
  E z10 = K.mul(z5, z5), z15 = K.mul(z10, z5), z20 = K.mul(z10, z10);
  E num = K.add(K.one(), K.mul(K.from_int(228), z5));
  num = K.add(num, K.mul(K.from_int(494), z10));
  num = K.sub(num, K.mul(K.from_int(228), z15));
  num = K.add(num, z20);
  num = K.mul(num, K.mul(num, num));
  E den = K.sub(K.sub(K.one(), K.mul(K.from_int(11), z5)), z10);
  den = K.mul(z5, K.pow(den, 5));
  return {num, den};
}

template <class F>
void j5_S_invariance(const F& K, std::vector<IdentityCheck>& out, std::mt19937_64& rng,
                     unsigned points) {
  using E = typename F::Element;
  // find an element of multiplicative order 5
  const u64 q = K.order_u64();
  if ((q - 1) % 5 != 0) {
    push(out, "j5_S_invariance", true, "skipped: no 5th root of unity in the field");
    return;
  }
  E zeta = K.one();
  while (K.is_zero(K.sub(zeta, K.one()))) {
    E a = K.sample_uniform(rng);
    if (K.is_zero(a)) continue;
    zeta = K.pow(a, (q - 1) / 5);
  }
  bool ok = true;
  std::string wit;
  for (unsigned i = 0; i < points && ok; ++i) {
    E z = K.sample_uniform(rng);
    auto [n1, d1] = j5_eval(K, z);
    auto [n2, d2] = j5_eval(K, K.mul(zeta, z));
    if (K.is_zero(d1) || K.is_zero(d2)) continue;
    if (!K.is_zero(K.sub(K.mul(n1, d2), K.mul(n2, d1)))) {
      ok = false;
      wit = "z=" + elem_str(K, z);
    }
  }
  push(out, "j5_S_invariance", ok, wit);
}

}  // namespace

IdentityReport identity_suite(Prime l, unsigned points, u64 seed) {
  if (l.value() <= 5) throw std::invalid_argument("identity_suite: l > 5 required");
  Fp K(l);
  std::mt19937_64 rng(seed ^ (l.value() * 0xa24baed4963ee407ull));
  IdentityReport rep{l.value(), points, {}};
  auto& out = rep.checks;
  E5Data d = e5_data(K);

  auto c = [&](u64 hi) { return K.from_uint(hi); };  // reduce a positive constant

  // discriminant and resultant constants
  push(out, "disc_f0", discriminant(K, d.f0) == c(4608000ull));            // 2^12 3^2 5^3
  push(out, "disc_f1728", discriminant(K, d.f1728) == c(2592000ull));      // 2^8 3^4 5^3
  push(out, "disc_g0", discriminant(K, d.g0) == c(1125000000000000ull));   // 2^12 3^2 5^15
  push(out, "disc_g1728",
       discriminant(K, d.g1728) == c(9887695312500000000ull));             // 2^8 3^4 5^21
  push(out, "res_g0_cusp", resultant(K, d.g0, d.cusp) == c(9765625ull));   // 5^10

  // disc_x G(x,j) = 5^145 j^8 (j-1728)^6 and disc_x F(x,j) = 5^13 j^8 (j-1728)^6
  {
    bool okG = true, okF = true;
    std::string witG, witF;
    auto disc_point = [&](u64 j, bool& ok, std::string& wit, bool isG, u64 pw) {
      if (!ok) return;
      Poly<Fp> P = isG ? build_Gj(K, j) : build_fj(K, j);
      u64 lhs = discriminant(K, P);
      u64 j8 = K.pow(K.from_uint(j), 8);
      u64 m6 = K.pow(K.sub(K.from_uint(j), c(1728)), 6);
      u64 rhs = K.mul(K.pow(c(5), pw), K.mul(j8, m6));
      if (lhs != rhs) {
        ok = false;
        wit = "j=" + std::to_string(j);
      }
    };
    disc_point(1, okG, witG, true, 145);
    disc_point(1, okF, witF, false, 13);
    for (unsigned i = 0; i < points; ++i) {
      u64 j = rand_below(rng, l.value());
      disc_point(j, okG, witG, true, 145);
      disc_point(j, okF, witF, false, 13);
    }
    push(out, "disc_G_formula", okG, witG);
    push(out, "disc_F_formula", okF, witF);
  }

  // G(x,1728) = g1728^2 (x^2+1)^2 and F(x,1728) = f1728^2 (x^2+1)^2
  {
    Poly<Fp> w = pow_poly(K, d.x2p1, 2);
    push(out, "G_at_1728",
         build_Gj(K, K.from_uint(1728)) == mul(K, pow_poly(K, d.g1728, 2), w));
    push(out, "F_at_1728",
         build_fj(K, K.from_uint(1728)) == mul(K, pow_poly(K, d.f1728, 2), w));
  }

  // x^12 F(-1/x, j) = F(x, j): root sets closed under x -> -1/x
  {
    bool ok = true;
    std::string wit;
    for (unsigned i = 0; i < points && ok; ++i) {
      u64 j = rand_below(rng, l.value());
      Poly<Fp> Fj = build_fj(K, j);
      Poly<Fp> rec = mobius_weighted(K, Fj, 0, K.from_int(-1), K.one(), 0);
      if (rec != Fj) {
        ok = false;
        wit = "j=" + std::to_string(j);
      }
    }
    push(out, "fj_reciprocal", ok, wit);
  }

  // j5(-1/z) = j5(z)
  {
    bool ok = true;
    std::string wit;
    for (unsigned i = 0; i < points && ok; ++i) {
      u64 z = rand_below(rng, l.value());
      if (z == 0) continue;
      auto [n1, d1] = j5_eval(K, z);
      auto [n2, d2] = j5_eval(K, K.neg(K.inv(z)));
      if (K.is_zero(d1) || K.is_zero(d2)) continue;
      if (K.mul(n1, d2) != K.mul(n2, d1)) {
        ok = false;
        wit = "z=" + std::to_string(z);
      }
    }
    push(out, "j5_U_invariance", ok, wit);
  }

  // sqrt(5)-dependent identities, over F_l when possible, else F_{l^2}
  if (auto s5 = sqrt5_mod(K)) {
    sqrt5_block(K, s5->first, "", out, rng, points);
  } else {
    Fq K2 = build_extension(l, 2, seed);
    auto roots5 = roots_in_field(K2, embed(K2, poly_from_ints(K, {-5, 0, 1})), seed);
    if (roots5.size() != 2) throw std::logic_error("identity_suite: sqrt 5 not found in F_l2");
    sqrt5_block(K2, roots5[0], "", out, rng, points);
  }

  // S(z) = zeta z invariance of j_5 (needs a 5th root of unity; in F_l or
  // F_{l^2} exactly when l = +-1 mod 5)
  if ((l.value() - 1) % 5 == 0) {
    j5_S_invariance(K, out, rng, points);
  } else if ((l.value() + 1) % 5 == 0) {
    Fq K2 = build_extension(l, 2, seed);
    j5_S_invariance(K2, out, rng, points);
  } else {
    push(out, "j5_S_invariance", true, "skipped: zeta_5 lies outside F_l2");
  }

  return rep;
}

}  // namespace tnf
