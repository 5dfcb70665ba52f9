#ifndef TNF_FACTOR_HPP
#define TNF_FACTOR_HPP

#include <map>
#include <random>
#include <vector>

#include "tnf/poly.hpp"

namespace tnf {

inline constexpr u64 kDefaultSeed = 0x5eed1dabbadcafe5ull;

inline u64 rand_below(std::mt19937_64& rng, u64 n) {
  // rejection sampling keeps the stream portable across standard libraries
  u64 lim = ~u64{0} - ~u64{0} % n;
  u64 v;
  do { v = rng(); } while (v >= lim);
  return v % n;
}

namespace detail {

template <class F>
u64 poly_hash(const F& K, const Poly<F>& f) {
  u64 h = 1469598103934665603ull;
  auto mix = [&](u64 v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(K.order_u64());
  for (const auto& e : f.c) mix(K.digest(e));
  return h;
}

template <class F>
std::mt19937_64 seeded_rng(const F& K, const Poly<F>& f, u64 seed) {
  // per-call-context PRNG: seed mixed with a digest of the input
  return std::mt19937_64(seed ^ (poly_hash(K, f) * 0x9e3779b97f4a7c15ull) ^ K.order_u64());
}

}  // namespace detail

// f with all multiplicities flattened to one: the monic product of the
// distinct irreducible factors. Handles the derivative-zero branch
// (perfect p-th powers) of characteristic p.
template <class F>
Poly<F> squarefree_part(const F& K, const Poly<F>& f);

template <class F>
Poly<F> pth_root(const F& K, const Poly<F>& f) {
  // pre: f' == 0, i.e. f = g(x^p) with coefficients that are p-th powers
  const u64 p = K.characteristic();
  const u64 root_exp = K.order_u64() / p;  // a -> a^(q/p) is the inverse of a -> a^p
  std::vector<typename F::Element> v;
  v.reserve(f.c.size() / p + 1);
  for (size_t i = 0; i < f.c.size(); ++i) {
    if (i % p == 0) {
      v.push_back(K.pow(f.c[i], root_exp));
    } else if (!K.is_zero(f.c[i])) {
      throw std::logic_error("pth_root: derivative was not zero");
    }
  }
  return make_poly(K, std::move(v));
}

template <class F>
Poly<F> squarefree_part(const F& K, const Poly<F>& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree_part of zero");
  Poly<F> g = monic(K, f);
  if (g.degree() == 0) return g;
  Poly<F> d = derivative(K, g);
  if (d.is_zero()) return squarefree_part(K, pth_root(K, g));
  Poly<F> gg = gcd(K, g, d);
  Poly<F> w = div_exact(K, g, gg);  // distinct factors with mult not divisible by p
  // strip w's content from the cofactor; what survives has p | multiplicity
  Poly<F> c = gg;
  for (;;) {
    Poly<F> e = gcd(K, c, w);
    if (e.degree() == 0) break;
    c = div_exact(K, c, e);
  }
  if (c.degree() == 0) return w;
  return mul(K, w, squarefree_part(K, pth_root(K, c)));
}

// -------- complete factorization --------

template <class F>
struct Factorization {
  typename F::Element unit;
  std::vector<std::pair<Poly<F>, unsigned>> factors;  // monic irreducible, sorted

  Poly<F> reconstruct(const F& K) const {
    Poly<F> acc = poly_const(K, unit);
    for (const auto& [f, m] : factors)
      for (unsigned i = 0; i < m; ++i) acc = mul(K, acc, f);
    return acc;
  }

  void sort_factors() {
    std::sort(factors.begin(), factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }

  // multiply in another factorization, raised to the given power
  void merge_with(const F& K, const Factorization& o, unsigned mult = 1) {
    unit = K.mul(unit, K.pow(o.unit, mult));
    for (const auto& [f, m] : o.factors) {
      auto it = std::find_if(factors.begin(), factors.end(),
                             [&](const auto& pr) { return pr.first == f; });
      if (it != factors.end())
        it->second += m * mult;
      else
        factors.emplace_back(f, m * mult);
    }
    sort_factors();
  }

  unsigned distinct_of_degree(int d) const {
    unsigned n = 0;
    for (const auto& [f, m] : factors) n += (f.degree() == d);
    return n;
  }
};

template <class F>
bool is_irreducible(const F& K, const Poly<F>& f) {
  int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  // x^{q^n} == x mod f, and x^{q^{n/t}} - x coprime to f for prime t | n
  Poly<F> x = poly_x(K);
  if (frobenius_power(K, f, static_cast<unsigned>(n)) != mod(K, x, f)) return false;
  auto coprime_at = [&](int i) {
    Poly<F> h = frobenius_power(K, f, static_cast<unsigned>(i));
    return gcd(K, sub(K, h, x), f).degree() == 0;
  };
  int m = n;
  for (int t = 2; t * t <= m; ++t) {
    if (m % t) continue;
    if (!coprime_at(n / t)) return false;
    while (m % t == 0) m /= t;
  }
  if (m > 1 && !coprime_at(n / m)) return false;
  return true;
}

namespace detail {

template <class F>
Poly<F> random_poly_below(const F& K, int deg_bound, std::mt19937_64& rng) {
  std::vector<typename F::Element> v(static_cast<size_t>(deg_bound));
  for (auto& e : v) e = K.sample_uniform(rng);
  return make_poly(K, std::move(v));
}

// split a product of distinct irreducibles of equal degree d
template <class F>
void equal_degree_split(const F& K, const Poly<F>& f, int d,
                        std::vector<Poly<F>>& out, std::mt19937_64& rng) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const u64 q = K.order_u64();
  Poly<F> g;
  for (;;) {
    Poly<F> h = random_poly_below(K, f.degree(), rng);
    if (h.degree() < 1) continue;
    g = gcd(K, h, f);
    if (g.degree() > 0 && g.degree() < f.degree()) break;  // lucky split
    if (q & 1) {
      // norm down to F_q then a (q-1)/2 power:
      // (q^d-1)/2 = (q-1)/2 * (1 + q + ... + q^{d-1})
      Poly<F> t = mod(K, h, f), nrm = t;
      for (int i = 1; i < d; ++i) {
        t = powmod(K, t, q, f);
        nrm = mod(K, mul(K, nrm, t), f);
      }
      Poly<F> v = powmod(K, nrm, (q - 1) / 2, f);
      g = gcd(K, sub(K, v, poly_one<F>(K)), f);
    } else {
      // char 2: additive trace sum_{i<kd} h^{2^i}
      u64 k = 0;
      for (u64 t2 = q; t2 > 1; t2 >>= 1) ++k;
      Poly<F> t = mod(K, h, f), acc = t;
      for (u64 i = 1; i < k * static_cast<u64>(d); ++i) {
        t = mod(K, mul(K, t, t), f);
        acc = add(K, acc, t);
      }
      g = gcd(K, acc, f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) break;
  }
  equal_degree_split(K, g, d, out, rng);
  equal_degree_split(K, div_exact(K, f, g), d, out, rng);
}

}  // namespace detail

// Complete factorization: squarefree part, then distinct-degree and
// randomized equal-degree splitting; multiplicities recovered by repeated
// division. Output ordering is deterministic (degree, then lexicographic
// coefficients) regardless of the random splitting path.
template <class F>
Factorization<F> factor(const F& K, const Poly<F>& f, u64 seed = kDefaultSeed) {
  if (f.is_zero()) throw std::invalid_argument("factor of zero polynomial");
  Factorization<F> out{f.lc(), {}};
  if (f.degree() == 0) return out;
  auto rng = detail::seeded_rng(K, f, seed);
  Poly<F> fm = monic(K, f);

  std::vector<Poly<F>> irreducibles;
  Poly<F> rem = squarefree_part(K, fm);
  Poly<F> h = mod(K, poly_x(K), rem);
  for (int d = 1; rem.degree() > 0; ++d) {
    if (2 * d > rem.degree()) {
      irreducibles.push_back(rem);  // what is left is irreducible
      break;
    }
    h = powmod(K, h, K.order_u64(), rem);
    Poly<F> g = gcd(K, sub(K, h, mod(K, poly_x(K), rem)), rem);
    if (g.degree() > 0) {
      detail::equal_degree_split(K, g, d, irreducibles, rng);
      rem = div_exact(K, rem, g);
      h = mod(K, h, rem);
    }
  }

  for (auto& p : irreducibles) {
    unsigned m = 0;
    for (;;) {
      auto [q, r] = divmod(K, fm, p);
      if (!r.is_zero()) break;
      fm = q;
      ++m;
    }
    out.factors.emplace_back(std::move(p), m);
  }
  out.sort_factors();
  return out;
}

// distinct roots of f in the field, sorted
template <class F>
std::vector<typename F::Element> roots_in_field(const F& K, const Poly<F>& f,
                                                u64 seed = kDefaultSeed) {
  if (f.is_zero()) throw std::invalid_argument("roots of zero polynomial");
  std::vector<typename F::Element> out;
  if (f.degree() == 0) return out;
  Poly<F> sf = squarefree_part(K, f);
  Poly<F> xq = powmod(K, poly_x(K), K.order_u64(), sf);
  Poly<F> g = gcd(K, sub(K, xq, poly_x(K)), sf);
  if (g.degree() > 0) {
    std::vector<Poly<F>> lin;
    auto rng = detail::seeded_rng(K, f, seed);
    detail::equal_degree_split(K, g, 1, lin, rng);
    out.reserve(lin.size());
    for (const auto& p : lin) out.push_back(K.neg(p.c[0]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<u64> roots_in_base(const Fp& K, const Poly<Fp>& f, u64 seed = kDefaultSeed) {
  return roots_in_field(K, f, seed);
}

// sanity companion to the Factorization invariants; used at trust boundaries
template <class F>
bool verify_factorization(const F& K, const Factorization<F>& fac, const Poly<F>& original,
                          bool check_irreducibility = true) {
  if (fac.reconstruct(K) != original) return false;
  for (size_t i = 0; i < fac.factors.size(); ++i) {
    const auto& [p, m] = fac.factors[i];
    if (m < 1) return false;
    if (p.is_zero() || !K.is_zero(K.sub(p.lc(), K.one()))) return false;
    for (size_t j = i + 1; j < fac.factors.size(); ++j)
      if (fac.factors[j].first == p) return false;
    if (check_irreducibility && !is_irreducible(K, p)) return false;
  }
  return true;
}

}  // namespace tnf

#endif
