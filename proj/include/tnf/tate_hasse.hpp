#ifndef TNF_TATE_HASSE_HPP
#define TNF_TATE_HASSE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tnf/extension.hpp"
#include "tnf/factor.hpp"
#include "tnf/supersingular.hpp"

namespace tnf {

// Fixed coefficient data (ascending), reduced per prime on demand.
// A dual hand-entered copy lives in the test suite to guard transcription.
struct E5Data {
  Poly<Fp> f0;      // x^4+12x^3+14x^2-12x+1, vanishing where j = 0
  Poly<Fp> f1728;   // x^4+18x^3+74x^2-18x+1, vanishing where j = 1728
  Poly<Fp> g0;      // x^4-228x^3+494x^2+228x+1 (5-isogenous representation)
  Poly<Fp> g1728;   // x^4+522x^3-10006x^2-522x+1
  Poly<Fp> x2p1;    // x^2+1
  Poly<Fp> delta;   // x^5 (1-11x-x^2)
  Poly<Fp> delta5;  // x (1-11x-x^2)^5
  Poly<Fp> cusp;    // 1-11x-x^2
};
E5Data e5_data(const Fp& K);

struct E7Data {
  Poly<Fp> c2;  // x^2-x+1
  Poly<Fp> f1;  // x^6-11x^5+30x^4-15x^3-10x^2+5x+1
  Poly<Fp> f2;  // the degree-12 block attached to j = 1728
  Poly<Fp> f3;  // x^3-8x^2+5x+1
};
E7Data e7_data(const Fp& K);

// Numerator/denominator of the j-invariant as a rational function of the
// curve parameter, plus an optional polynomial prefactor applied verbatim.
struct RationalSubstitution {
  Poly<Fp> num, den, prefactor;
};
RationalSubstitution e5_substitution(const Fp& K, int rep);  // rep 1 or 2
RationalSubstitution e7_substitution(const Fp& K);

// prefactor * den^{n_l} * J_l(num/den), the cleared-denominator composition.
Poly<Fp> compose_J(Prime l, const RationalSubstitution& sub);

enum class CurveTag { E5Rep1, E5Rep2, E7 };

struct HasseInvariant {
  CurveTag tag;
  Prime l;
  JExponents e;
  Poly<Fp> poly;
  Factorization<Fp> fac;  // verified to reconstruct poly exactly
};

// Hasse invariant of the Tate normal form for a point of order 5, as a
// polynomial in the parameter b over F_l. Degree 4r + 6s + 12 n_l = l - 1
// for both representations; the two differ only by a nonzero scalar.
HasseInvariant build_H5(Prime l, int rep = 1, u64 seed = kDefaultSeed);

// Order-7 analogue; degree 8r + 12s + 24 n_l = 2(l - 1). Rejects l in {2,3,7}.
HasseInvariant build_H7(Prime l, u64 seed = kDefaultSeed);

// F(x, j) = f0(x)^3 - j x^5(1-11x-x^2), degree 12, F(0, j) = 1.
Poly<Fp> build_fj(const Fp& K, u64 j);
// G(x, j) = g0(x)^3 - j x(1-11x-x^2)^5, degree 12.
Poly<Fp> build_Gj(const Fp& K, u64 j);

// square roots of 5 mod l as (smaller, larger), when 5 is a QR
std::optional<std::pair<u64, u64>> sqrt5_mod(const Fp& K);

struct IdentityCheck {
  std::string name;
  bool pass;
  std::string detail;  // witness values on failure
};

struct IdentityReport {
  u64 l;
  unsigned points;
  std::vector<IdentityCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  unsigned failures() const {
    unsigned n = 0;
    for (const auto& c : checks) n += !c.pass;
    return n;
  }
};

// Evaluates the discriminant/resultant constants, the Mobius covariance
// between the two E5 representations, the sqrt(5) splittings, and the
// j_5 transformation identities, all mod l (in F_{l^2} when sqrt(5) or a
// fifth root of unity is not in F_l). Point-dependent identities run at
// `points` pseudorandom arguments.
IdentityReport identity_suite(Prime l, unsigned points = 100, u64 seed = kDefaultSeed);

}  // namespace tnf

#endif
