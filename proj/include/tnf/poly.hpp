#ifndef TNF_POLY_HPP
#define TNF_POLY_HPP

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tnf/ff.hpp"

namespace tnf {

// Dense univariate polynomial over a field context F (Fp or Fq).
// Coefficients ascending; invariant: back() is nonzero unless the
// polynomial is zero (empty vector). The field context is passed to the
// free functions below, never stored.
template <class F>
struct Poly {
  using Elem = typename F::Element;
  std::vector<Elem> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const Elem& operator[](size_t i) const { return c[i]; }

  Elem coeff(const F& K, size_t i) const { return i < c.size() ? c[i] : K.zero(); }
  Elem lc() const {
    if (c.empty()) throw std::invalid_argument("lc of zero polynomial");
    return c.back();
  }

  void normalize(const F& K) {
    while (!c.empty() && K.is_zero(c.back())) c.pop_back();
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
  // degree first, then lexicographic on the coefficient sequence
  friend bool operator<(const Poly& a, const Poly& b) {
    if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
    return a.c < b.c;
  }
};

template <class F>
Poly<F> make_poly(const F& K, std::vector<typename F::Element> cs) {
  Poly<F> f{std::move(cs)};
  f.normalize(K);
  return f;
}

template <class F>
Poly<F> poly_zero() { return Poly<F>{}; }

template <class F>
Poly<F> poly_const(const F& K, typename F::Element e) {
  return make_poly(K, {e});
}

template <class F>
Poly<F> poly_one(const F& K) { return poly_const(K, K.one()); }

template <class F>
Poly<F> poly_x(const F& K) { return make_poly(K, {K.zero(), K.one()}); }

// ascending integer coefficients, reduced into the field
template <class F>
Poly<F> poly_from_ints(const F& K, std::initializer_list<long long> cs) {
  std::vector<typename F::Element> v;
  v.reserve(cs.size());
  for (long long a : cs) v.push_back(K.from_int(a));
  return make_poly(K, std::move(v));
}

template <class F>
Poly<F> poly_from_ints(const F& K, const std::vector<long long>& cs) {
  std::vector<typename F::Element> v;
  v.reserve(cs.size());
  for (long long a : cs) v.push_back(K.from_int(a));
  return make_poly(K, std::move(v));
}

template <class F>
Poly<F> add(const F& K, const Poly<F>& a, const Poly<F>& b) {
  std::vector<typename F::Element> v(std::max(a.c.size(), b.c.size()), K.zero());
  for (size_t i = 0; i < a.c.size(); ++i) v[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) v[i] = K.add(v[i], b.c[i]);
  return make_poly(K, std::move(v));
}

template <class F>
Poly<F> sub(const F& K, const Poly<F>& a, const Poly<F>& b) {
  std::vector<typename F::Element> v(std::max(a.c.size(), b.c.size()), K.zero());
  for (size_t i = 0; i < a.c.size(); ++i) v[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) v[i] = K.sub(v[i], b.c[i]);
  return make_poly(K, std::move(v));
}

template <class F>
Poly<F> neg(const F& K, const Poly<F>& a) {
  auto v = a.c;
  for (auto& e : v) e = K.neg(e);
  return Poly<F>{std::move(v)};
}

template <class F>
Poly<F> mul_scalar(const F& K, const Poly<F>& a, const typename F::Element& s) {
  if (K.is_zero(s)) return poly_zero<F>();
  auto v = a.c;
  for (auto& e : v) e = K.mul(e, s);
  return Poly<F>{std::move(v)};
}

// Generic schoolbook product. The Fp overload below accumulates in 128 bits.
template <class F>
Poly<F> mul(const F& K, const Poly<F>& a, const Poly<F>& b) {
  if (a.is_zero() || b.is_zero()) return poly_zero<F>();
  std::vector<typename F::Element> v(a.c.size() + b.c.size() - 1, K.zero());
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (K.is_zero(a.c[i])) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      v[i + j] = K.add(v[i + j], K.mul(a.c[i], b.c[j]));
  }
  return make_poly(K, std::move(v));
}

// Over Fp, sum 128-bit products and reduce once per output coefficient.
// Valid for p < 2^32 (each product < 2^64, far from 128-bit overflow);
// larger moduli use the generic path.
inline Poly<Fp> mul(const Fp& K, const Poly<Fp>& a, const Poly<Fp>& b) {
  if (a.is_zero() || b.is_zero()) return poly_zero<Fp>();
  const size_t na = a.c.size(), nb = b.c.size();
  std::vector<u64> v(na + nb - 1, 0);
  if (K.modulus() < (u64{1} << 32)) {
    for (size_t k = 0; k < v.size(); ++k) {
      u128 acc = 0;
      size_t lo = k >= nb - 1 ? k - (nb - 1) : 0;
      size_t hi = std::min(k, na - 1);
      for (size_t i = lo; i <= hi; ++i) acc += u128(a.c[i]) * b.c[k - i];
      v[k] = K.reduce_u128(acc);
    }
  } else {
    for (size_t i = 0; i < na; ++i) {
      if (a.c[i] == 0) continue;
      for (size_t j = 0; j < nb; ++j) v[i + j] = K.add(v[i + j], K.mul(a.c[i], b.c[j]));
    }
  }
  Poly<Fp> f{std::move(v)};
  f.normalize(K);
  return f;
}

template <class F>
Poly<F> pow_poly(const F& K, Poly<F> base, unsigned e) {
  Poly<F> r = poly_one<F>(K);
  while (e) {
    if (e & 1) r = mul(K, r, base);
    if (e >>= 1) base = mul(K, base, base);
  }
  return r;
}

// Exact (q, r) with deg r < deg b. Throws on zero divisor.
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const F& K, const Poly<F>& a, const Poly<F>& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  if (a.degree() < b.degree()) return {poly_zero<F>(), a};
  auto rem = a.c;
  const int db = b.degree();
  std::vector<typename F::Element> q(a.c.size() - b.c.size() + 1, K.zero());
  const auto lb_inv = K.inv(b.lc());
  for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
    if (K.is_zero(rem[i])) continue;
    auto f = K.mul(rem[i], lb_inv);
    q[i - db] = f;
    for (int j = 0; j <= db; ++j)
      rem[i - db + j] = K.sub(rem[i - db + j], K.mul(f, b.c[j]));
  }
  return {make_poly(K, std::move(q)), make_poly(K, std::move(rem))};
}

template <class F>
Poly<F> mod(const F& K, const Poly<F>& a, const Poly<F>& b) {
  return divmod(K, a, b).second;
}

template <class F>
Poly<F> div_exact(const F& K, const Poly<F>& a, const Poly<F>& b) {
  auto [q, r] = divmod(K, a, b);
  if (!r.is_zero()) throw std::logic_error("div_exact: nonzero remainder");
  return q;
}

template <class F>
Poly<F> monic(const F& K, const Poly<F>& f) {
  if (f.is_zero()) return f;
  return mul_scalar(K, f, K.inv(f.lc()));
}

// monic gcd
template <class F>
Poly<F> gcd(const F& K, Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    auto r = mod(K, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(K, a);
}

template <class F>
typename F::Element eval(const F& K, const Poly<F>& f, const typename F::Element& x) {
  auto acc = K.zero();
  for (auto it = f.c.rbegin(); it != f.c.rend(); ++it) acc = K.add(K.mul(acc, x), *it);
  return acc;
}

template <class F>
Poly<F> derivative(const F& K, const Poly<F>& f) {
  if (f.degree() < 1) return poly_zero<F>();
  std::vector<typename F::Element> v(f.c.size() - 1);
  for (size_t i = 1; i < f.c.size(); ++i) {
    auto m = K.from_uint(static_cast<u64>(i % K.characteristic()));
    v[i - 1] = K.mul(f.c[i], m);
  }
  return make_poly(K, std::move(v));
}

// base^e mod m by square-and-multiply
template <class F>
Poly<F> powmod(const F& K, const Poly<F>& base, u64 e, const Poly<F>& m) {
  Poly<F> r = mod(K, poly_one<F>(K), m);
  Poly<F> b = mod(K, base, m);
  while (e) {
    if (e & 1) r = mod(K, mul(K, r, b), m);
    b = mod(K, mul(K, b, b), m);
    e >>= 1;
  }
  return r;
}

// x^{q^i} mod f, q = field order
template <class F>
Poly<F> frobenius_power(const F& K, const Poly<F>& f, unsigned i) {
  if (f.is_zero()) throw std::invalid_argument("frobenius_power: zero modulus");
  Poly<F> h = mod(K, poly_x(K), f);
  for (unsigned r = 0; r < i; ++r) h = powmod(K, h, K.order_u64(), f);
  return h;
}

template <class F>
Poly<F> compose(const F& K, const Poly<F>& f, const Poly<F>& g) {
  Poly<F> acc = poly_zero<F>();
  for (auto it = f.c.rbegin(); it != f.c.rend(); ++it)
    acc = add(K, mul(K, acc, g), poly_const(K, *it));
  return acc;
}

// den^n * f(num/den) for n = deg f (cleared-denominator substitution),
// via Horner in (num, den).
template <class F>
Poly<F> subst_rational(const F& K, const Poly<F>& f, const Poly<F>& num, const Poly<F>& den) {
  if (f.is_zero()) return poly_zero<F>();
  int n = f.degree();
  Poly<F> acc = poly_const(K, f.c[n]);
  Poly<F> dpow = poly_one<F>(K);
  for (int i = n - 1; i >= 0; --i) {
    dpow = mul(K, dpow, den);
    acc = add(K, mul(K, acc, num), mul_scalar(K, dpow, f.c[i]));
  }
  return acc;
}

// (cx+d)^{deg f} * f((ax+b)/(cx+d))
template <class F>
Poly<F> mobius_weighted(const F& K, const Poly<F>& f,
                        const typename F::Element& a, const typename F::Element& b,
                        const typename F::Element& c, const typename F::Element& d) {
  return subst_rational(K, f, make_poly(K, {b, a}), make_poly(K, {d, c}));
}

// Euclidean resultant; res(f, g) = lc(g)^{deg f} prod g-roots etc., with the
// standard sign bookkeeping res(f,g) = (-1)^{deg f deg g} res(g,f).
template <class F>
typename F::Element resultant(const F& K, Poly<F> f, Poly<F> g) {
  if (f.is_zero() || g.is_zero()) return K.zero();
  auto r = K.one();
  while (g.degree() > 0) {
    auto rem = mod(K, f, g);
    if ((f.degree() & 1) && (g.degree() & 1)) r = K.neg(r);
    int drop = f.degree() - (rem.is_zero() ? 0 : rem.degree());
    if (rem.is_zero()) return K.zero();
    r = K.mul(r, K.pow(g.lc(), static_cast<u64>(drop)));
    f = std::move(g);
    g = std::move(rem);
  }
  return K.mul(r, K.pow(g.c[0], static_cast<u64>(f.degree())));
}

// disc(f) = (-1)^{n(n-1)/2} res(f, f') / lc(f)
template <class F>
typename F::Element discriminant(const F& K, const Poly<F>& f) {
  int n = f.degree();
  if (n < 1) throw std::invalid_argument("discriminant needs deg >= 1");
  auto r = resultant(K, f, derivative(K, f));
  r = K.div(r, f.lc());
  if ((static_cast<u64>(n) * (n - 1) / 2) & 1) r = K.neg(r);
  return r;
}

// Lagrange interpolation through distinct nodes: build the master product
// once and peel off each node by synthetic division.
template <class F>
Poly<F> interpolate(const F& K, const std::vector<typename F::Element>& xs,
                    const std::vector<typename F::Element>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  if (xs.empty()) return poly_zero<F>();
  Poly<F> master = poly_one<F>(K);
  for (const auto& xi : xs) master = mul(K, master, make_poly(K, {K.neg(xi), K.one()}));
  std::vector<typename F::Element> acc(xs.size(), K.zero());
  std::vector<typename F::Element> q(xs.size());  // master / (x - x_i), degree n-1
  for (size_t i = 0; i < xs.size(); ++i) {
    auto carry = K.zero();
    for (size_t k = xs.size(); k-- > 0;) {
      carry = K.add(master.c[k + 1], K.mul(carry, xs[i]));
      q[k] = carry;
    }
    auto denom = K.zero();  // q(x_i) by Horner
    for (size_t k = q.size(); k-- > 0;) denom = K.add(K.mul(denom, xs[i]), q[k]);
    auto scale = K.div(ys[i], denom);
    for (size_t k = 0; k < q.size(); ++k) acc[k] = K.add(acc[k], K.mul(q[k], scale));
  }
  return make_poly(K, std::move(acc));
}

}  // namespace tnf

#endif
