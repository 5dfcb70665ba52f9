// Acceptance suite: runs every verification criterion at full sweep range
// and prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <memory>
#include <mutex>

#include "tnf/harness.hpp"

using namespace tnf;

namespace {

int g_failures = 0;
unsigned g_workers = 8;
std::chrono::steady_clock::time_point g_mark;

void report(int idx, const char* what, bool pass, const std::string& detail = "") {
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - g_mark).count();
  g_mark = std::chrono::steady_clock::now();
  std::printf("%s criterion %2d (%5.1fs): %s%s%s\n", pass ? "PASS" : "FAIL", idx, secs, what,
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::vector<u64> primes_mod(u64 lo, u64 hi, unsigned mod, unsigned rem) {
  std::vector<u64> out;
  for (u64 p : primes_in_range(lo, hi))
    if (p % mod == rem) out.push_back(p);
  return out;
}

// run fn over primes, collecting failures
template <class Fn>
std::string sweep(const std::vector<u64>& primes, Fn&& fn) {
  std::vector<std::string> bad(primes.size());
  parallel_for(primes.size(), g_workers, [&](size_t i) { bad[i] = fn(primes[i]); });
  unsigned count = 0;
  std::string first;
  for (const auto& b : bad)
    if (!b.empty()) {
      if (first.empty()) first = b;
      ++count;
    }
  if (count == 0) return "";
  return std::to_string(count) + " failing primes, first: " + first;
}

std::string verdict_fail(const TheoremVerdict& v) {
  if (!v.applicable || v.pass) return "";
  return v.id + "@" + std::to_string(v.prime) + " observed=" + v.observed +
         " expected=" + v.expected;
}

// shared E5 census cache for criteria 1-4
struct E5Cache {
  std::mutex mu;
  std::map<u64, std::shared_ptr<E5Census>> map;
  std::shared_ptr<E5Census> get(u64 p) {
    {
      std::lock_guard<std::mutex> lk(mu);
      auto it = map.find(p);
      if (it != map.end()) return it->second;
    }
    auto c = std::make_shared<E5Census>(census_e5(Prime(p)));
    std::lock_guard<std::mutex> lk(mu);
    return map.emplace(p, std::move(c)).first->second;
  }
} g_e5;

struct E7Cache {
  std::mutex mu;
  std::map<u64, std::shared_ptr<E7Census>> map;
  std::shared_ptr<E7Census> get(u64 p) {
    {
      std::lock_guard<std::mutex> lk(mu);
      auto it = map.find(p);
      if (it != map.end()) return it->second;
    }
    auto c = std::make_shared<E7Census>(census_e7(Prime(p)));
    std::lock_guard<std::mutex> lk(mu);
    return map.emplace(p, std::move(c)).first->second;
  }
} g_e7;

void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  auto primes = primes_mod(19, 1499, 5, 4);
  std::string bad = sweep(primes, [&](u64 p) {
    auto v = verdict_thm11(*g_e5.get(p));
    // spot anchors
    if (p == 19 && v.observed != "8") return std::string("anchor 19 != 8");
    if (p == 59 && v.observed != "24") return std::string("anchor 59 != 24");
    return verdict_fail(v);
  });
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_time = secs < 60.0;
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu primes in %.1fs%s", primes.size(), secs,
                in_time ? "" : " (over the 60s budget)");
  report(1, "Thm 1.1 linear-factor counts, l = 4 mod 5 up to 1499", bad.empty() && in_time,
         bad.empty() ? std::string(buf) : bad);
}

void criterion2() {
  auto primes = primes_mod(19, 1499, 5, 4);
  std::string bad =
      sweep(primes, [&](u64 p) { return verdict_fail(verdict_thm12(*g_e5.get(p))); });
  report(2, "Thm 1.2 exactly-4-roots per supersingular j, total 4·S(F_l)", bad.empty(), bad);
}

void criterion3() {
  std::vector<u64> primes;
  for (u64 p : primes_in_range(7, 1499))
    if (p % 5 == 1 || p % 5 == 4) primes.push_back(p);
  std::string bad =
      sweep(primes, [&](u64 p) { return verdict_fail(verdict_thm43(*g_e5.get(p))); });
  report(3, "Thm 4.3 x^2+ax-1 factor counts up to 1499", bad.empty(), bad);
}

void criterion4() {
  auto primes = primes_in_range(7, 999);
  std::string bad =
      sweep(primes, [&](u64 p) { return verdict_fail(verdict_thm14(*g_e5.get(p))); });
  report(4, "Thm 1.4 quartic and eps-quadratic counts vs h(-5l) up to 999", bad.empty(), bad);
}

void criterion5() {
  std::vector<u64> primes;
  for (u64 p : primes_in_range(5, 499))
    if (p != 7) primes.push_back(p);
  std::string bad =
      sweep(primes, [&](u64 p) { return verdict_fail(verdict_thm52(*g_e7.get(p))); });
  report(5, "Thm 5.2 irreducible-degree profiles of the order-7 Hasse invariant", bad.empty(),
         bad);
}

void criterion6() {
  std::vector<u64> primes;
  for (u64 p : primes_in_range(5, 499))
    if (p != 7) primes.push_back(p);
  std::string bad =
      sweep(primes, [&](u64 p) { return verdict_fail(verdict_thm53(*g_e7.get(p))); });
  report(6, "Thm 5.3 g_a cubics, phi-invariance, sextic pairing up to 499", bad.empty(), bad);
}

void criterion7() {
  std::vector<u64> primes;
  for (u64 p : primes_in_range(5, 999))
    if (p != 7) primes.push_back(p);
  std::string bad =
      sweep(primes, [&](u64 p) { return verdict_fail(verdict_conj1(*g_e7.get(p))); });
  report(7, "Conjecture 1 linear/cubic counts up to 999 (conjecture rows)", bad.empty(), bad);
}

void criterion8() {
  auto primes = primes_in_range(5, 1999);
  std::string bad = sweep(primes, [&](u64 p) {
    auto v = verdict_sfl(Prime(p));
    return verdict_fail(v);
  });
  // anchors ss_11 = x(x-1), ss_13 = x-5, ss_23 = x(x-3)(x-19)
  bool anchors = true;
  {
    Fp K11(Prime(11)), K13(Prime(13)), K23(Prime(23));
    anchors = build_ss(Prime(11)).ss ==
                  mul(K11, poly_x(K11), poly_from_ints(K11, {-1, 1})) &&
              build_ss(Prime(13)).ss == poly_from_ints(K13, {-5, 1}) &&
              build_ss(Prime(23)).ss ==
                  mul(K23, mul(K23, poly_x(K23), poly_from_ints(K23, {-3, 1})),
                      poly_from_ints(K23, {-19, 1}));
  }
  report(8, "S(F_l) formula for 5 <= l <= 1999 with anchors", bad.empty() && anchors,
         anchors ? bad : "anchor polynomial mismatch");
}

void criterion9() {
  std::vector<std::pair<int, u64>> tasks;
  for (int N : {2, 3, 5, 7})
    for (u64 p : primes_in_range(2, 499))
      if (static_cast<u64>(N) != p) tasks.emplace_back(N, p);
  std::vector<std::string> bad(tasks.size());
  parallel_for(tasks.size(), g_workers, [&](size_t i) {
    auto [N, p] = tasks[i];
    bad[i] = verdict_fail(verdict_thm61(N, Prime(p)));
  });
  std::string first;
  unsigned count = 0;
  for (auto& b : bad)
    if (!b.empty()) {
      if (first.empty()) first = b;
      ++count;
    }
  // anchor: ss*(2,11) = X(X+1)
  Fp K11(Prime(11));
  bool anchor =
      build_ss_star(2, Prime(11)).poly == mul(K11, poly_x(K11), poly_from_ints(K11, {1, 1}));
  report(9, "Thm 6.1 all ss* factors of degree <= 2, N in {2,3,5,7}, p <= 499",
         count == 0 && anchor,
         count ? first : (anchor ? std::to_string(tasks.size()) + " (N,p) pairs" : "anchor"));
}

void criterion10() {
  auto primes = primes_in_range(7, 999);
  std::string bad =
      sweep(primes, [&](u64 p) { return verdict_fail(verdict_thm71(Prime(p))); });
  bool anchors = verdict_thm71(Prime(11)).observed == "4" &&
                 verdict_thm71(Prime(13)).observed == "2" &&
                 verdict_thm71(Prime(19)).observed == "6";
  report(10, "Thm 7.1 L^(5*)(p) class-number formula for 7 <= p <= 999",
         bad.empty() && anchors, bad.empty() ? (anchors ? "" : "anchors") : bad);
}

void criterion11() {
  // 10 pseudorandom primes in [10^3, 10^6], >= 100 points each
  std::mt19937_64 rng(kDefaultSeed);
  std::vector<u64> primes;
  while (primes.size() < 10) {
    u64 c = 1000 + rand_below(rng, 999000);
    if (!is_prime_u64(c)) continue;
    if (std::find(primes.begin(), primes.end(), c) != primes.end()) continue;
    primes.push_back(c);
  }
  std::string bad = sweep(primes, [&](u64 p) -> std::string {
    auto rep = identity_suite(Prime(p), 100, kDefaultSeed);
    for (const auto& c : rep.checks)
      if (!c.pass) return "identity " + c.name + "@" + std::to_string(p) + " " + c.detail;
    for (int N : {2, 3, 5, 7}) {
      auto r = parametrization_check(N, Prime(p), 100, kDefaultSeed);
      if (!r.pass())
        return "parametrization N=" + std::to_string(N) + "@" + std::to_string(p);
    }
    auto h = h20_resultant_check(Prime(p), 100, kDefaultSeed);
    if (!h.pass()) return "H-20@" + std::to_string(p);
    return "";
  });
  // integer anchor: both H-20 sides at j=0 equal 85184000000 (checked mod
  // two primes whose product exceeds the value)
  bool anchor = h20_resultant_check(Prime(2305843009213693951ull), 1, 1).pass();
  report(11, "identity suite at 10 pseudorandom primes in [10^3, 10^6]",
         bad.empty() && anchor, bad.empty() ? (anchor ? "" : "j=0 anchor") : bad);
}

void criterion12() {
  std::string detail;
  bool ok = true;

  // factorization reconstruction on random polynomials
  {
    std::mt19937_64 rng(99);
    for (u64 p : {2ull, 13ull, 499ull, 997ull}) {
      Fp K{Prime(p)};
      for (int i = 0; i < 12 && ok; ++i) {
        std::vector<u64> c(static_cast<size_t>(2 + rand_below(rng, 29)));
        for (auto& e : c) e = K.sample_uniform(rng);
        c.push_back(1 + rand_below(rng, p - 1));
        Poly<Fp> f = make_poly(K, std::move(c));
        if (f.degree() < 1) continue;
        if (i % 4 == 0) f = mul(K, f, f);
        if (!verify_factorization(K, factor(K, f, i), f)) {
          ok = false;
          detail = "reconstruction failed at p=" + std::to_string(p);
        }
      }
    }
  }

  // root-scan oracle equivalence for l <= 1000
  if (ok) {
    std::mt19937_64 rng(123);
    for (u64 p : {31ull, 257ull, 997ull}) {
      Fp K{Prime(p)};
      for (int i = 0; i < 6 && ok; ++i) {
        std::vector<u64> c(10);
        for (auto& e : c) e = K.sample_uniform(rng);
        c.push_back(1);
        Poly<Fp> f = make_poly(K, std::move(c));
        std::vector<u64> brute;
        for (u64 a = 0; a < p; ++a)
          if (K.is_zero(eval(K, f, a))) brute.push_back(a);
        if (roots_in_base(K, f) != brute) {
          ok = false;
          detail = "root scan mismatch at p=" + std::to_string(p);
        }
      }
    }
  }

  // squarefree-part correctness
  if (ok) {
    std::mt19937_64 rng(321);
    for (u64 p : {3ull, 101ull}) {
      Fp K{Prime(p)};
      for (int i = 0; i < 10 && ok; ++i) {
        std::vector<u64> c(static_cast<size_t>(2 + rand_below(rng, 8)));
        for (auto& e : c) e = K.sample_uniform(rng);
        c.push_back(1);
        Poly<Fp> f = make_poly(K, std::move(c));
        Poly<Fp> sq = mul(K, f, f);
        Poly<Fp> sf = squarefree_part(K, sq);
        Poly<Fp> d = derivative(K, sf);
        bool good = divmod(K, sq, sf).second.is_zero() &&
                    (d.is_zero() || gcd(K, sf, d).degree() == 0);
        if (!good) {
          ok = false;
          detail = "squarefree part at p=" + std::to_string(p);
        }
      }
    }
  }

  // cross-construction equality of ss* for p <= 200, all levels
  if (ok) {
    std::vector<std::pair<int, u64>> tasks;
    for (int N : {2, 3, 5, 7})
      for (u64 p : primes_in_range(2, 200))
        if (static_cast<u64>(N) != p) tasks.emplace_back(N, p);
    std::vector<char> good(tasks.size(), 1);
    parallel_for(tasks.size(), g_workers, [&](size_t i) {
      auto [N, p] = tasks[i];
      Fp K{Prime(p)};
      good[i] = monic(K, build_ss_star(N, Prime(p)).poly) ==
                ss_star_via_resultant(N, Prime(p));
    });
    for (size_t i = 0; i < tasks.size(); ++i)
      if (!good[i]) {
        ok = false;
        detail = "ss* cross-construction N=" + std::to_string(tasks[i].first) +
                 " p=" + std::to_string(tasks[i].second);
        break;
      }
  }

  // the two Hasse representations share their squarefree part (7 < l <= 500)
  if (ok) {
    auto primes = primes_in_range(11, 500);
    std::string bad = sweep(primes, [&](u64 p) -> std::string {
      Fp K{Prime(p)};
      auto a = build_H5(Prime(p), 1);
      auto b = build_H5(Prime(p), 2);
      if (squarefree_part(K, a.poly) != squarefree_part(K, b.poly))
        return "rep1/rep2 mismatch at " + std::to_string(p);
      return "";
    });
    if (!bad.empty()) {
      ok = false;
      detail = bad;
    }
  }

  report(12, "property suite (reconstruction, roots, squarefree, ss* cross-check)", ok,
         detail);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_workers = static_cast<unsigned>(std::stoul(argv[1]));
  auto t0 = std::chrono::steady_clock::now();
  g_mark = t0;
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  criterion12();
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s: 12 criteria, %d failing (%.1fs total)\n",
              g_failures ? "FAIL" : "PASS", g_failures, secs);
  return g_failures ? 1 : 0;
}
