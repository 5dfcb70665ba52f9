#ifndef TNF_SHAPES_HPP
#define TNF_SHAPES_HPP

#include <map>
#include <optional>
#include <string>

#include "tnf/tate_hasse.hpp"

namespace tnf {

// Counts of the distinguished factor shapes inside a factorization over F_l.
// Multiplicities are ignored throughout: a count is the number of distinct
// monic irreducibles matching the pattern.
struct ShapeCounts {
  unsigned linear = 0;
  unsigned quad_negone = 0;             // x^2 + a x - 1
  std::optional<unsigned> quad_eps;     // x^2 + r x + s, r = eps^5 (s-1) or conj;
                                        // disengaged when sqrt(5) is not in F_l
  unsigned quartic_ga = 0;              // x^4 + a x^3 + (11a+2) x^2 - a x + 1
  unsigned cubic_ga = 0;                // x^3 + a x^2 - (a+3) x + 1
  unsigned sextic_total = 0;
  unsigned sextic_paired = 0;           // sextics splitting as g_a g_{a^l} over F_{l^2}
  bool eps_double_match = false;        // a factor matched both eps branches (x^2+1)
  std::map<int, unsigned> degree_profile;  // degree -> distinct-factor count
};

ShapeCounts classify(const Fp& K, const Factorization<Fp>& fac,
                     bool with_sextic_pairing = true, u64 seed = kDefaultSeed);

// true iff (x-1)^{deg f} f(-1/(x-1)) is a scalar multiple of f.
// Requires f(1) != 0 (the weighted transform must keep the degree).
bool phi_invariance(const Fp& K, const Poly<Fp>& f);

// For an irreducible sextic over F_l: factor over F_{l^2} and test for the
// split f = g_a g_b with both cubics of the g_a shape and b = a^l.
bool sextic_pairing(const Fp& K, const Poly<Fp>& f, u64 seed = kDefaultSeed);

// ---------------- theorem verdicts ----------------

struct TheoremVerdict {
  std::string id;
  u64 prime = 0;
  bool applicable = false;
  std::string observed, expected;
  bool pass = false;
  bool conjecture = false;
  std::string notes;

  TheoremVerdict() = default;
  TheoremVerdict(std::string id_, u64 prime_, bool applicable_)
      : id(std::move(id_)), prime(prime_), applicable(applicable_) {}
};

// Everything the E5-side verdicts consume, built once per prime.
struct E5Census {
  Prime l;
  SupersingularData ss;
  HasseInvariant H;  // representation 1
  ShapeCounts shapes;
};
E5Census census_e5(Prime l, u64 seed = kDefaultSeed);

struct E7Census {
  Prime l;
  HasseInvariant H;
  ShapeCounts shapes;
};
E7Census census_e7(Prime l, u64 seed = kDefaultSeed);

TheoremVerdict verdict_thm11(const E5Census& c);
TheoremVerdict verdict_thm12(const E5Census& c);
TheoremVerdict verdict_thm43(const E5Census& c);
TheoremVerdict verdict_thm14(const E5Census& c);
TheoremVerdict verdict_prop21(Prime l);
TheoremVerdict verdict_thm52(const E7Census& c);
TheoremVerdict verdict_thm53(const E7Census& c, u64 seed = kDefaultSeed);
TheoremVerdict verdict_conj1(const E7Census& c);
// base-field root count of ss_l against the class-number formula
TheoremVerdict verdict_sfl(Prime l);

}  // namespace tnf

#endif
