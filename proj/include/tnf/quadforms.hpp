#ifndef TNF_QUADFORMS_HPP
#define TNF_QUADFORMS_HPP

#include "tnf/ff.hpp"

namespace tnf {

struct ClassCount {
  i64 disc;  // negative discriminant
  u64 h;     // class number (count of primitive reduced forms)
};

bool is_squarefree_u64(u64 m);

// Class number of the imaginary quadratic order of discriminant D < 0,
// by exhaustive enumeration of primitive reduced forms (a, b, c):
// |b| <= a <= c, b >= 0 when |b| = a or a = c, gcd(a, b, c) = 1.
// Rejects D >= 0 and D = 2, 3 (mod 4).
u64 order_class_number(i64 D);

// Class number of Q(sqrt(-m)) for squarefree m > 0: the order class number
// at the fundamental discriminant -m (if -m = 1 mod 4) or -4m.
ClassCount field_class_number(u64 m);

// Number of supersingular j-invariants in F_l:
//   h(-l)/2  if l = 1 mod 4,
//   2h(-l)   if l = 3 mod 8,
//   h(-l)    if l = 7 mod 8,
// with h the class number of Q(sqrt(-l)). Requires l > 3.
u64 S_count(Prime l);

}  // namespace tnf

#endif
