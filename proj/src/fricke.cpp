#include "tnf/fricke.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tnf {

const FrickeRelation& fricke_relation(int N) {
  static const FrickeRelation r2{2, 3, 0, {3456, -207, 1}, {1}, 0, 3, {144, 1}};
  static const FrickeRelation r3{3, 4, 1, {2944, -126, 1}, {1}, 1, 3, {192, 1}};
  static const FrickeRelation r5{5, 6, 0, {3456, 7776, -12600, 1890, -80, 1}, {1},
                                 0, 3, {144, 216, 1}};
  static const FrickeRelation r7{7, 8, 1, {8, -21, 1}, {-1280, -1008, 454, -42, 1},
                                 2, 3, {448, 224, 1}};
  switch (N) {
    case 2: return r2;
    case 3: return r3;
    case 5: return r5;
    case 7: return r7;
    default: throw std::invalid_argument("fricke_relation: N must be 2, 3, 5 or 7");
  }
}

namespace {

// distinct supersingular j-invariants realized inside F_{p^2}
std::vector<Fq::Element> supersingular_js(const Fq& K2, Prime p, u64 seed) {
  const u64 pv = p.value();
  if (pv == 2 || pv == 3) return {K2.zero()};  // j = 0 is the only one
  auto ss = build_ss(p);
  auto roots = roots_in_field(K2, embed(K2, ss.ss), seed);
  if (static_cast<int>(roots.size()) != ss.ss.degree())
    throw std::logic_error("supersingular_js: a supersingular j fell outside F_{p^2}");
  return roots;
}

std::string fq_str(const Fq::Element& e) {
  std::string s = "(";
  for (size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

}  // namespace

SSStar build_ss_star(int N, Prime p, u64 seed) {
  if (static_cast<u64>(N) == p.value())
    throw std::invalid_argument("build_ss_star: p = N is not admissible");
  fricke_relation(N);  // validates N
  Fp K(p);
  Fq K2 = build_extension(p, 2, seed);
  SSStar out;
  out.N = N;
  out.p = p.value();
  out.ext_modulus = K2.modulus_poly();

  std::set<Fq::Element> roots;
  for (const auto& j : supersingular_js(K2, p, seed)) {
    Poly<Fq> ry = rn_specialize(K2, N, j);
    Poly<Fq> sf = squarefree_part(K2, ry);
    if (sf.degree() != ry.degree()) {
      out.multiplicity_event = true;
      out.notes += "repeated Y-root at j=" + fq_str(j) + "; ";
    }
    auto found = roots_in_field(K2, ry, seed);
    if (static_cast<int>(found.size()) < sf.degree()) {
      out.counterexample = true;
      out.notes += "Y-root outside F_{p^2} at j=" + fq_str(j) + "; ";
    }
    roots.insert(found.begin(), found.end());
  }

  // Frobenius orbits -> minimal polynomials over F_p
  Poly<Fp> poly = poly_one<Fp>(K);
  std::set<Fq::Element> seen;
  for (const auto& a : roots) {
    if (seen.count(a)) continue;
    Fq::Element b = K2.frobenius(a);
    if (!roots.count(b)) throw std::logic_error("build_ss_star: root set not Frobenius-stable");
    seen.insert(a);
    seen.insert(b);
    if (b == a) {
      if (!K2.in_base(a)) throw std::logic_error("build_ss_star: fixed root not in F_p");
      poly = mul(K, poly, make_poly(K, {K.neg(a[0]), K.one()}));
      ++out.L;
    } else {
      Fq::Element s = K2.add(a, b), pr = K2.mul(a, b);
      if (!K2.in_base(s) || !K2.in_base(pr))
        throw std::logic_error("build_ss_star: orbit polynomial not over F_p");
      poly = mul(K, poly, make_poly(K, {pr[0], K.neg(s[0]), K.one()}));
    }
  }
  out.poly = std::move(poly);
  out.star_roots.assign(roots.begin(), roots.end());
  return out;
}

Poly<Fp> ss_star_via_resultant(int N, Prime p, u64 seed) {
  if (static_cast<u64>(N) == p.value())
    throw std::invalid_argument("ss_star_via_resultant: p = N");
  Fp K(p);
  Poly<Fp> ssp = (p.value() == 2 || p.value() == 3) ? poly_x(K) : build_ss(p).ss;
  const int bound = fricke_relation(N).deg_y * ssp.degree();
  const u64 npts = static_cast<u64>(bound) + 1;

  if (p.value() >= npts) {
    // enough points in the prime field itself
    const FrickeRelation& R = fricke_relation(N);
    Poly<Fp> q = mul(K, poly_from_ints(K, R.q1), poly_from_ints(K, R.q2));
    for (int t = 0; t < R.q_ypow; ++t) q = mul(K, q, poly_x(K));
    Poly<Fp> rr = pow_poly(K, poly_from_ints(K, R.r_base), static_cast<unsigned>(R.r_pow));
    for (int t = 0; t < R.r_ypow; ++t) rr = mul(K, rr, poly_x(K));
    std::vector<u64> xs, ys;
    for (u64 y0 = 0; y0 < npts; ++y0) {
      // R_N(X, y0) as a quadratic in X: X^2 - q(y0) X + r(y0)
      Poly<Fp> quad = make_poly(K, {eval(K, rr, y0), K.neg(eval(K, q, y0)), K.one()});
      xs.push_back(y0);
      ys.push_back(resultant(K, ssp, quad));
    }
    Poly<Fp> interp = interpolate(K, xs, ys);
    return monic(K, squarefree_part(K, interp));
  }

  // interpolate over an extension with p^k points available
  unsigned k = 2;
  u128 sz = static_cast<u128>(p.value()) * p.value();
  while (sz < npts) {
    sz *= p.value();
    ++k;
  }
  Fq K2 = build_extension(p, k, seed ^ 0x517cc1b727220a95ull);
  Poly<Fq> ss2 = embed(K2, ssp);
  const FrickeRelation& R = fricke_relation(N);
  Poly<Fq> q = mul(K2, poly_from_ints(K2, R.q1), poly_from_ints(K2, R.q2));
  for (int t = 0; t < R.q_ypow; ++t) q = mul(K2, q, poly_x(K2));
  Poly<Fq> rr = pow_poly(K2, poly_from_ints(K2, R.r_base), static_cast<unsigned>(R.r_pow));
  for (int t = 0; t < R.r_ypow; ++t) rr = mul(K2, rr, poly_x(K2));
  std::vector<Fq::Element> xs, ys;
  for (u64 i = 0; i < npts; ++i) {
    Fq::Element y0 = K2.element_at(i);
    Poly<Fq> quad = make_poly(K2, {eval(K2, rr, y0), K2.neg(eval(K2, q, y0)), K2.one()});
    xs.push_back(y0);
    ys.push_back(resultant(K2, ss2, quad));
  }
  Poly<Fq> interp = interpolate(K2, xs, ys);
  // coefficients must land in the prime field
  std::vector<u64> base;
  base.reserve(interp.c.size());
  for (const auto& e : interp.c) {
    if (!K2.in_base(e)) throw std::logic_error("ss_star_via_resultant: coefficient not in F_p");
    base.push_back(e[0]);
  }
  return monic(K, squarefree_part(K, make_poly(K, std::move(base))));
}

TheoremVerdict verdict_thm61(int N, Prime p, u64 seed) {
  u64 pv = p.value();
  TheoremVerdict v{"thm6.1[N=" + std::to_string(N) + "]", pv, true};
  if (static_cast<u64>(N) == pv) {
    v.applicable = false;
    v.pass = true;
    v.observed = v.expected = "-";
    return v;
  }
  SSStar s = build_ss_star(N, p, seed);
  int maxdeg = 0;
  Fp K(p);
  for (const auto& [f, m] : factor(K, s.poly, seed).factors)
    maxdeg = std::max(maxdeg, f.degree());
  v.expected = "all roots in F_p2";
  v.observed = s.counterexample ? "root outside F_p2"
                                : "maxdeg=" + std::to_string(maxdeg);
  v.pass = !s.counterexample && maxdeg <= 2;
  if (s.multiplicity_event) v.notes = "multiple Y-roots deduped";
  return v;
}

TheoremVerdict verdict_thm71(Prime p, u64 seed) {
  u64 pv = p.value();
  TheoremVerdict v{"thm7.1", pv, true};
  if (pv <= 5) {
    v.applicable = false;
    v.pass = true;
    v.observed = v.expected = "-";
    return v;
  }
  SSStar s = build_ss_star(5, p, seed);
  u64 hp = field_class_number(pv).h;
  u64 h5p = field_class_number(5 * pv).h;
  u64 one_plus = static_cast<u64>(1 + legendre_symbol(static_cast<i64>(pv), Prime(5)));
  u64 expect;
  if (pv % 4 == 1)
    expect = one_plus * hp / 4 + h5p / 4;
  else if (pv % 8 == 3)
    expect = one_plus * hp + h5p / 2;
  else
    expect = one_plus * hp / 2 + h5p;
  v.expected = std::to_string(expect);
  v.observed = std::to_string(s.L);
  v.pass = s.L == expect;
  return v;
}

namespace {

struct RatPoint {
  bool ok;
  u64 x, y;
};

// evaluate X(t), Y(t) for the level-N parametrization; ok=false at poles
RatPoint param_point(const Fp& K, int N, u64 t) {
  auto at = [&](std::initializer_list<long long> cs, u64 v) {
    return eval(K, poly_from_ints(K, cs), v);
  };
  switch (N) {
    case 2: {
      u64 d1 = K.mul(t, K.sub(t, 1 % K.modulus()));  // t(t-1)
      if (K.is_zero(d1)) return {false, 0, 0};
      u64 xnum = K.mul(K.from_uint(256), K.pow(at({1, -1, 1}, t), 3));
      u64 x = K.div(xnum, K.mul(d1, d1));
      u64 ynum = K.mul(K.from_uint(16), K.pow(K.add(t, K.one()), 4));
      u64 yden = K.mul(t, K.pow(K.sub(t, K.one()), 2));
      return {true, x, K.div(ynum, yden)};
    }
    case 3: {
      u64 a3 = K.pow(t, 3);
      u64 den = K.sub(a3, K.from_uint(27));
      if (K.is_zero(den)) return {false, 0, 0};
      u64 x = K.div(K.mul(a3, K.pow(K.sub(a3, K.from_uint(24)), 3)), den);
      u64 y = K.div(K.mul(a3, a3), den);
      return {true, x, y};
    }
    case 5: {
      u64 den = K.add(t, K.from_uint(11));
      if (K.is_zero(den)) return {false, 0, 0};
      u64 x = K.neg(K.div(K.pow(at({16, 12, 1}, t), 3), den));
      u64 y = K.neg(K.div(at({4, 0, 1}, t), den));
      return {true, x, y};
    }
    case 7: {
      u64 c2 = at({1, -1, 1}, t);
      u64 f1v = at({1, 5, -10, -15, 30, -11, 1}, t);
      u64 f3v = at({1, 5, -8, 1}, t);
      u64 dd = K.mul(K.mul(t, K.sub(t, K.one())), f3v);
      if (K.is_zero(dd)) return {false, 0, 0};
      u64 x = K.div(K.mul(K.pow(c2, 3), K.pow(f1v, 3)),
                    K.mul(K.pow(K.mul(t, K.sub(t, K.one())), 7), f3v));
      u64 y = K.div(K.pow(c2, 3), dd);
      return {true, x, y};
    }
    default:
      throw std::invalid_argument("param_point: bad N");
  }
}

u64 rn_value(const Fp& K, int N, u64 x, u64 y) {
  const FrickeRelation& R = fricke_relation(N);
  u64 q = K.mul(eval(K, poly_from_ints(K, R.q1), y), eval(K, poly_from_ints(K, R.q2), y));
  q = K.mul(q, K.pow(y, static_cast<u64>(R.q_ypow)));
  u64 r = K.pow(eval(K, poly_from_ints(K, R.r_base), y), static_cast<u64>(R.r_pow));
  r = K.mul(r, K.pow(y, static_cast<u64>(R.r_ypow)));
  return K.add(K.sub(K.mul(x, x), K.mul(x, q)), r);
}

}  // namespace

TrialReport parametrization_check(int N, Prime l, unsigned trials, u64 seed) {
  Fp K(l);
  fricke_relation(N);
  TrialReport rep;
  rep.l = l.value();
  std::mt19937_64 rng(seed ^ (l.value() * 0xd6e8feb86659fd93ull) ^ static_cast<u64>(N));
  unsigned done = 0;
  while (done < trials) {
    u64 t = rand_below(rng, l.value());
    RatPoint pt = param_point(K, N, t);
    if (!pt.ok) continue;
    ++done;
    ++rep.trials;
    if (!K.is_zero(rn_value(K, N, pt.x, pt.y))) {
      ++rep.failures;
      rep.failure_notes.push_back("R_" + std::to_string(N) + " != 0 at t=" + std::to_string(t));
    }
  }
  if (N == 7) {
    E7Data d = e7_data(K);
    for (unsigned i = 0; i < trials; ++i) {
      u64 a = rand_below(rng, l.value());
      if (a == K.from_int(-8)) continue;  // excluded parameter
      u64 y = rand_below(rng, l.value());
      // (x^2-x+1)^3 - Y x(x-1)(x^3-8x^2+5x+1)
      Poly<Fp> lhsP = sub(K, pow_poly(K, d.c2, 3),
                          mul_scalar(K, mul(K, mul(K, poly_x(K), poly_from_ints(K, {-1, 1})), d.f3), y));
      Poly<Fp> cubic = make_poly(K, {K.one(), K.neg(K.add(a, K.from_uint(3))), a, K.one()});
      u64 res = resultant(K, lhsP, cubic);
      u64 rhs = K.add(K.mul(K.add(a, K.from_uint(8)), y),
                      K.add(K.mul(a, a), K.add(K.mul(K.from_uint(3), a), K.from_uint(9))));
      rhs = K.pow(rhs, 3);
      ++rep.trials;
      if (res != rhs) {
        ++rep.failures;
        rep.failure_notes.push_back("cubic resultant identity failed at a=" + std::to_string(a) +
                                    " Y=" + std::to_string(y));
      }
    }
  }
  return rep;
}

TrialReport h20_resultant_check(Prime l, unsigned trials, u64 seed) {
  Fp K(l);
  TrialReport rep;
  rep.l = l.value();
  std::mt19937_64 rng(seed ^ (l.value() * 0xca5a826395121157ull));
  Poly<Fp> g = poly_from_ints(K, {-4, 22, 1});
  Poly<Fp> base = pow_poly(K, poly_from_ints(K, {16, 12, 1}), 3);
  Poly<Fp> zp11 = poly_from_ints(K, {11, 1});
  auto run_one = [&](u64 j) {
    Poly<Fp> f = add(K, base, mul_scalar(K, zp11, j));
    u64 lhs = resultant(K, f, g);
    // -5^3 (j^2 - 1264000 j - 681472000)
    u64 pol = K.sub(K.sub(K.mul(j, j), K.mul(K.from_uint(1264000), j)), K.from_uint(681472000));
    u64 rhs = K.neg(K.mul(K.from_uint(125), pol));
    ++rep.trials;
    if (lhs != rhs) {
      ++rep.failures;
      rep.failure_notes.push_back("H-20 identity failed at j=" + std::to_string(j));
    }
    return lhs;
  };
  u64 at0 = run_one(0);
  if (at0 != K.from_uint(85184000000ull)) {
    ++rep.failures;
    rep.failure_notes.push_back("anchor at j=0 is not 85184000000 mod l");
  }
  for (unsigned i = 0; i < trials; ++i) run_one(rand_below(rng, l.value()));
  return rep;
}

}  // namespace tnf
