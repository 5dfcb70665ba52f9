#ifndef TNF_EXTENSION_HPP
#define TNF_EXTENSION_HPP

#include <vector>

#include "tnf/factor.hpp"
#include "tnf/poly.hpp"

namespace tnf {

// F_{l^k} as residue polynomials over F_l modulo a monic irreducible of
// degree k (built directly over the prime field, never as a tower, so the
// Frobenius a -> a^l is a plain modular power). Elements are canonical
// length-k coefficient vectors, comparable without the context.
class Fq {
 public:
  using Element = std::vector<u64>;

  Fq(const Fp& base, Poly<Fp> modulus) : base_(base), mod_(std::move(modulus)) {
    k_ = static_cast<unsigned>(mod_.degree());
    if (k_ < 2) throw std::invalid_argument("Fq: modulus degree must be >= 2");
    if (!base_.is_zero(base_.sub(mod_.lc(), base_.one())))
      throw std::invalid_argument("Fq: modulus must be monic");
    u128 q = 1;
    for (unsigned i = 0; i < k_; ++i) {
      q *= base_.modulus();
      if (q > ~u64{0}) throw std::invalid_argument("Fq: field order overflows 64 bits");
    }
    order_ = static_cast<u64>(q);
    if (!is_irreducible(base_, mod_))
      throw std::invalid_argument("Fq: modulus is reducible");
  }

  const Fp& base() const { return base_; }
  const Poly<Fp>& modulus_poly() const { return mod_; }
  unsigned ext_degree() const { return k_; }
  u64 characteristic() const { return base_.modulus(); }
  u64 order_u64() const { return order_; }

  Element zero() const { return Element(k_, 0); }
  Element one() const { return from_base(base_.one()); }
  Element gen() const {
    Element e(k_, 0);
    e[1] = 1;
    return e;
  }
  Element from_base(u64 v) const {
    Element e(k_, 0);
    e[0] = base_.from_uint(v);
    return e;
  }
  Element from_uint(u64 v) const { return from_base(v); }
  Element from_int(i64 v) const { return from_base(base_.from_int(v)); }

  bool is_zero(const Element& a) const {
    for (u64 v : a)
      if (v) return false;
    return true;
  }
  bool in_base(const Element& a) const {
    for (unsigned i = 1; i < k_; ++i)
      if (a[i]) return false;
    return true;
  }

  Element add(const Element& a, const Element& b) const {
    Element r(k_);
    for (unsigned i = 0; i < k_; ++i) r[i] = base_.add(a[i], b[i]);
    return r;
  }
  Element sub(const Element& a, const Element& b) const {
    Element r(k_);
    for (unsigned i = 0; i < k_; ++i) r[i] = base_.sub(a[i], b[i]);
    return r;
  }
  Element neg(const Element& a) const {
    Element r(k_);
    for (unsigned i = 0; i < k_; ++i) r[i] = base_.neg(a[i]);
    return r;
  }

  Element mul(const Element& a, const Element& b) const {
    std::vector<u64> prod(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i) {
      if (!a[i]) continue;
      for (unsigned j = 0; j < k_; ++j)
        prod[i + j] = base_.add(prod[i + j], base_.mul(a[i], b[j]));
    }
    // reduce by the monic modulus
    for (int i = static_cast<int>(prod.size()) - 1; i >= static_cast<int>(k_); --i) {
      u64 c = prod[i];
      if (!c) continue;
      prod[i] = 0;
      for (unsigned j = 0; j < k_; ++j)
        prod[i - k_ + j] = base_.sub(prod[i - k_ + j], base_.mul(c, mod_.c[j]));
    }
    prod.resize(k_);
    return prod;
  }

  Element pow(Element a, u64 e) const {
    Element r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  Element inv(const Element& a) const {
    if (is_zero(a)) throw std::invalid_argument("Fq::inv of zero");
    return pow(a, order_ - 2);
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

  // the base-field Frobenius a -> a^l (generates Gal(F_{l^k}/F_l))
  Element frobenius(const Element& a) const { return pow(a, characteristic()); }

  Element sample_uniform(std::mt19937_64& rng) const {
    Element e(k_);
    for (auto& v : e) v = base_.sample_uniform(rng);
    return e;
  }
  u64 digest(const Element& a) const {
    u64 h = 0x243f6a8885a308d3ull;
    for (u64 v : a) h = (h ^ v) * 0x100000001b3ull;
    return h;
  }

  // index in [0, q) -> element, for exhaustive scans over small fields
  Element element_at(u64 idx) const {
    Element e(k_);
    for (unsigned i = 0; i < k_; ++i) {
      e[i] = idx % base_.modulus();
      idx /= base_.modulus();
    }
    return e;
  }

  Poly<Fp> lift(const Element& a) const { return make_poly(base_, {a.begin(), a.end()}); }
  Element project(const Poly<Fp>& f) const {
    Poly<Fp> r = mod(base_, f, mod_);
    Element e(k_, 0);
    for (size_t i = 0; i < r.c.size(); ++i) e[i] = r.c[i];
    return e;
  }

  friend bool operator==(const Fq& a, const Fq& b) {
    return a.base_ == b.base_ && a.mod_ == b.mod_;
  }

 private:
  Fp base_;
  Poly<Fp> mod_;
  unsigned k_;
  u64 order_;
};

// Seeded random search for a monic irreducible modulus of degree k.
inline Fq build_extension(Prime l, unsigned k, u64 seed = kDefaultSeed) {
  if (k < 2) throw std::invalid_argument("build_extension: k must be >= 2");
  Fp K(l);
  std::mt19937_64 rng(seed ^ (l.value() * 0x9e3779b97f4a7c15ull) ^ k);
  for (;;) {
    std::vector<u64> cs(k + 1);
    for (unsigned i = 0; i < k; ++i) cs[i] = K.sample_uniform(rng);
    cs[k] = 1;
    Poly<Fp> cand = make_poly(K, std::move(cs));
    if (is_irreducible(K, cand)) return Fq(K, std::move(cand));
  }
}

// coefficientwise embedding F_l[x] -> F_{l^k}[x]
inline Poly<Fq> embed(const Fq& K2, const Poly<Fp>& f) {
  std::vector<Fq::Element> v;
  v.reserve(f.c.size());
  for (u64 c : f.c) v.push_back(K2.from_base(c));
  return make_poly(K2, std::move(v));
}

}  // namespace tnf

#endif
