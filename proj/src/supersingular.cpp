#include "tnf/supersingular.hpp"

namespace tnf {

JExponents j_exponents(Prime l) {
  if (l.value() <= 3) throw std::invalid_argument("j_exponents: l > 3 required");
  return {static_cast<unsigned>(l.value() / 12),
          (1 - legendre_symbol(-3, l)) / 2,
          (1 - legendre_symbol(-4, l)) / 2};
}

Poly<Fp> build_J(Prime l) {
  Fp K(l);
  auto [n, r, s] = j_exponents(l);
  Poly<Fp> shift = poly_from_ints(K, {-1728, 1});
  Poly<Fp> J = poly_zero<Fp>();
  Poly<Fp> pw = poly_one<Fp>(K);  // (t-1728)^k
  for (unsigned k = 0; k <= n; ++k) {
    u64 c = K.mul(binomial_mod(2 * n + s, 2 * k + s, l), binomial_mod(2 * n - 2 * k, n - k, l));
    c = K.mul(c, K.pow(K.from_int(-432), n - k));
    J = add(K, J, mul_scalar(K, pw, c));
    if (k < n) pw = mul(K, pw, shift);
  }
  if (J.degree() != static_cast<int>(n)) throw std::logic_error("build_J: degree drop");
  return J;
}

SupersingularData build_ss(Prime l) {
  Fp K(l);
  auto e = j_exponents(l);
  Poly<Fp> J = build_J(l);
  Poly<Fp> ss = J;
  if (e.r) ss = mul(K, ss, poly_x(K));
  if (e.s) ss = mul(K, ss, poly_from_ints(K, {-1728, 1}));
  auto roots = roots_in_base(K, ss);
  if (roots.size() != S_count(l))
    throw std::logic_error("build_ss: root count disagrees with the class-number formula");
  return {l, e, std::move(J), std::move(ss), std::move(roots)};
}

RSTSplit split_RST(Prime l) {
  Fp K(l);
  Poly<Fp> J = build_J(l);
  Poly<Fp> base = poly_from_ints(K, {-1728, 1});
  const u64 e = (l.value() - 1) / 2;
  RSTSplit out;

  Poly<Fp> xJ = mul(K, poly_x(K), J);
  Poly<Fp> pw_xJ = powmod(K, base, e, xJ);
  Poly<Fp> plus = gcd(K, add(K, pw_xJ, poly_one<Fp>(K)), xJ);

  if (l.value() % 4 == 3) {
    if (J.degree() > 0) {
      Poly<Fp> pw_J = powmod(K, base, e, J);
      out.R = gcd(K, sub(K, pw_J, poly_one<Fp>(K)), J);
    } else {
      out.R = poly_one<Fp>(K);
    }
    out.S = plus;
  } else {
    out.T = plus;
  }
  return out;
}

}  // namespace tnf
