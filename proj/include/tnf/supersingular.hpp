#ifndef TNF_SUPERSINGULAR_HPP
#define TNF_SUPERSINGULAR_HPP

#include <optional>
#include <vector>

#include "tnf/factor.hpp"
#include "tnf/poly.hpp"
#include "tnf/quadforms.hpp"

namespace tnf {

struct JExponents {
  unsigned n;  // floor(l/12)
  int r;       // (1 - (-3/l))/2
  int s;       // (1 - (-4/l))/2
};

JExponents j_exponents(Prime l);

// J_l(t) = sum_{k=0}^{n} C(2n+s, 2k+s) C(2n-2k, n-k) (-432)^{n-k} (t-1728)^k
// over F_l; degree exactly n.
Poly<Fp> build_J(Prime l);

struct SupersingularData {
  Prime l;
  JExponents e;
  Poly<Fp> J;
  Poly<Fp> ss;                  // x^r (x-1728)^s J(x), the supersingular polynomial
  std::vector<u64> base_roots;  // sorted roots of ss in F_l; size == S_count(l)
};

SupersingularData build_ss(Prime l);

// The gcd-defined split polynomials:
//   R = gcd(J_l(x), (x-1728)^((l-1)/2) - 1)    (l = 3 mod 4)
//   S = gcd(x J_l(x), (x-1728)^((l-1)/2) + 1)  (l = 3 mod 4)
//   T = gcd(x J_l(x), (x-1728)^((l-1)/2) + 1)  (l = 1 mod 4)
// with degree relations 2 deg R + 1 = h(-l), 2 deg S + 1 = h(-4l),
// 2 deg T = h(-4l) against the order class numbers.
struct RSTSplit {
  std::optional<Poly<Fp>> R, S, T;
};

RSTSplit split_RST(Prime l);

}  // namespace tnf

#endif
