#include "tnf/quadforms.hpp"

#include <numeric>

namespace tnf {

bool is_squarefree_u64(u64 m) {
  if (m == 0) return false;
  for (u64 d = 2; d * d <= m; ++d) {
    if (m % d) continue;
    m /= d;
    if (m % d == 0) return false;
  }
  return true;
}

u64 order_class_number(i64 D) {
  if (D >= 0) throw std::invalid_argument("order_class_number: D must be negative");
  i64 m4 = ((D % 4) + 4) % 4;
  if (m4 == 2 || m4 == 3)
    throw std::invalid_argument("order_class_number: D must be 0 or 1 mod 4");
  u64 h = 0;
  for (i64 a = 1; 3 * a * a <= -D; ++a) {
    for (i64 b = -a; b <= a; ++b) {
      i64 num = b * b - D;
      if (num % (4 * a)) continue;
      i64 c = num / (4 * a);
      if (c < a) continue;
      if ((b == -a || a == c) && b < 0) continue;  // boundary sign normalization
      if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
      ++h;
    }
  }
  return h;
}

ClassCount field_class_number(u64 m) {
  if (!is_squarefree_u64(m))
    throw std::invalid_argument("field_class_number: m must be squarefree and positive");
  i64 D = (m % 4 == 3) ? -static_cast<i64>(m) : -4 * static_cast<i64>(m);
  return {D, order_class_number(D)};
}

u64 S_count(Prime l) {
  if (l.value() <= 3) throw std::invalid_argument("S_count: l > 3 required");
  u64 h = field_class_number(l.value()).h;
  if (l.value() % 4 == 1) return h / 2;
  if (l.value() % 8 == 3) return 2 * h;
  return h;
}

}  // namespace tnf
