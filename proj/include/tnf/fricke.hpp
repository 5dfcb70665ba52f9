#ifndef TNF_FRICKE_HPP
#define TNF_FRICKE_HPP

#include <optional>
#include <string>
#include <vector>

#include "tnf/shapes.hpp"

namespace tnf {

// The quadratic modular relation R_N(X, Y) = X^2 - X q_N(Y) + r_N(Y) between
// the j-line and the Fricke-group Hauptmodul, N in {2, 3, 5, 7}. Stored in
// the printed (partially factored) form; deg_Y = 3, 4, 6, 8.
struct FrickeRelation {
  int N;
  int deg_y;
  int q_ypow;                          // q = Y^{q_ypow} * q1 * q2
  std::vector<long long> q1, q2;
  int r_ypow, r_pow;                   // r = Y^{r_ypow} * r_base^{r_pow}
  std::vector<long long> r_base;
};

const FrickeRelation& fricke_relation(int N);

// R_N(j, Y) as a polynomial in Y over the given field.
template <class F>
Poly<F> rn_specialize(const F& K, int N, const typename F::Element& j) {
  const FrickeRelation& R = fricke_relation(N);
  Poly<F> q = mul(K, poly_from_ints(K, R.q1), poly_from_ints(K, R.q2));
  for (int i = 0; i < R.q_ypow; ++i) q = mul(K, q, poly_x(K));
  Poly<F> r = pow_poly(K, poly_from_ints(K, R.r_base), static_cast<unsigned>(R.r_pow));
  for (int i = 0; i < R.r_ypow; ++i) r = mul(K, r, poly_x(K));
  Poly<F> out = sub(K, r, mul_scalar(K, q, j));
  out = add(K, out, poly_const(K, K.mul(j, j)));
  if (out.degree() != R.deg_y) throw std::logic_error("rn_specialize: degree drop");
  return out;
}

// ss_p^(N*): the product of (X - j*) over the distinct Y-roots of
// R_N(j, Y) = 0 in F_{p^2}, j running over the supersingular invariants in
// characteristic p. The roots are grouped into Frobenius orbits, so the
// polynomial lands in F_p[X].
struct SSStar {
  int N;
  u64 p;
  Poly<Fp> poly;                        // over F_p, squarefree
  Poly<Fp> ext_modulus;                 // the modulus defining the F_{p^2} used
  std::vector<Fq::Element> star_roots;  // sorted, in F_{p^2}
  unsigned L = 0;                       // roots in F_p = linear factors
  bool counterexample = false;          // a Y-root fell outside F_{p^2}
  bool multiplicity_event = false;      // R_N(j, Y) had a repeated Y-root
  std::string notes;
};

SSStar build_ss_star(int N, Prime p, u64 seed = kDefaultSeed);

// Cross-check construction: interpolate y -> Res_X(ss_p(X), R_N(X, y)) from
// deg-bound+1 sample points (over F_{p^k} with p^k large enough), then take
// the squarefree part.
Poly<Fp> ss_star_via_resultant(int N, Prime p, u64 seed = kDefaultSeed);

TheoremVerdict verdict_thm61(int N, Prime p, u64 seed = kDefaultSeed);
TheoremVerdict verdict_thm71(Prime p, u64 seed = kDefaultSeed);

struct TrialReport {
  u64 l = 0;
  unsigned trials = 0;
  unsigned failures = 0;
  std::vector<std::string> failure_notes;
  bool pass() const { return failures == 0; }
};

// R_N(X(t), Y(t)) = 0 for the rational parametrizations of each level, at
// random parameter values avoiding denominator zeros; for N = 7 also the
// cubic resultant identity Res_x(...) = ((a+8)Y + a^2+3a+9)^3.
TrialReport parametrization_check(int N, Prime l, unsigned trials, u64 seed = kDefaultSeed);

// Res_z((z^2+12z+16)^3 + j(z+11), z^2+22z-4) = -5^3 (j^2 - 1264000 j - 681472000)
TrialReport h20_resultant_check(Prime l, unsigned trials, u64 seed = kDefaultSeed);

}  // namespace tnf

#endif
