// Command-line front end: verify (theorem sweeps over prime ranges with
// CSV/JSON reports), hasse (build + factor a Hasse invariant), fricke
// (supersingular polynomial of a Fricke group), classnum, ss.
//
// Exit codes: 0 all applicable checks pass, 1 a check failed, 2 usage error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tnf/harness.hpp"

using namespace tnf;

namespace {

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(tok);
  return out;
}

bool parse_range(const std::string& s, u64& lo, u64& hi) {
  auto colon = s.find(':');
  if (colon == std::string::npos) return false;
  try {
    lo = std::stoull(s.substr(0, colon));
    hi = std::stoull(s.substr(colon + 1));
  } catch (const std::exception&) {
    return false;
  }
  return lo <= hi;
}

int cmd_verify(const RunConfig& cfg) {
  std::vector<ReportRow> rows = run_verify(cfg);
  std::ostringstream body;
  if (cfg.format == "json")
    write_json(body, cfg, rows);
  else
    write_csv(body, rows);
  if (cfg.out_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << cfg.out_path << "\n";
      return 2;
    }
    out << body.str();
  }
  return exit_status(rows, cfg.strict_conjectures);
}

void print_factorization(const Fp& K, const Factorization<Fp>& fac, const std::string& var) {
  std::cout << "  unit: " << fac.unit << "\n";
  for (const auto& [f, m] : fac.factors) {
    std::cout << "  (" << poly_to_string(K, f, var) << ")";
    if (m > 1) std::cout << "^" << m;
    std::cout << "\n";
  }
}

void print_shapes(const ShapeCounts& sc) {
  std::cout << "shape counts:\n"
            << "  linear:      " << sc.linear << "\n"
            << "  x^2+ax-1:    " << sc.quad_negone << "\n";
  if (sc.quad_eps)
    std::cout << "  eps-quads:   " << *sc.quad_eps
              << (sc.eps_double_match ? "  (a factor matched both eps branches)" : "") << "\n";
  else
    std::cout << "  eps-quads:   n/a (no sqrt 5 in F_l)\n";
  std::cout << "  g_a quartics:" << sc.quartic_ga << "\n"
            << "  g_a cubics:  " << sc.cubic_ga << "\n"
            << "  sextics:     " << sc.sextic_total << " (paired: " << sc.sextic_paired << ")\n";
  std::cout << "  degree profile: ";
  bool first = true;
  for (const auto& [d, n] : sc.degree_profile) {
    std::cout << (first ? "" : ", ") << d << ":" << n;
    first = false;
  }
  std::cout << "\n";
}

int cmd_hasse(const std::string& curve, int rep, u64 prime, bool print_factors,
              const std::string& format, u64 seed) {
  Prime l(prime);
  HasseInvariant H = curve == "e5" ? build_H5(l, rep, seed) : build_H7(l, seed);
  Fp K(l);
  ShapeCounts sc = classify(K, H.fac, /*with_sextic_pairing=*/curve == "e7", seed);
  if (format == "json") {
    nlohmann::json j;
    j["curve"] = curve;
    j["prime"] = prime;
    j["rep"] = curve == "e5" ? rep : 0;
    j["degree"] = H.poly.degree();
    j["poly"] = poly_to_string(K, H.poly, "b");
    auto& arr = j["factors"] = nlohmann::json::array();
    for (const auto& [f, m] : H.fac.factors)
      arr.push_back({{"poly", poly_to_string(K, f, "b")}, {"degree", f.degree()}, {"mult", m}});
    j["shapes"] = {{"linear", sc.linear},
                   {"quad_negone", sc.quad_negone},
                   {"quad_eps", sc.quad_eps ? nlohmann::json(*sc.quad_eps) : nlohmann::json()},
                   {"quartic_ga", sc.quartic_ga},
                   {"cubic_ga", sc.cubic_ga},
                   {"sextic_paired", sc.sextic_paired}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "Hasse invariant of " << (curve == "e5" ? "E5" : "E7") << " mod " << prime;
  if (curve == "e5") std::cout << " (representation " << rep << ")";
  std::cout << ", degree " << H.poly.degree() << ":\n  " << poly_to_string(K, H.poly, "b")
            << "\n";
  if (print_factors) {
    std::cout << "factorization:\n";
    print_factorization(K, H.fac, "b");
  }
  print_shapes(sc);
  return 0;
}

int cmd_fricke(int level, u64 prime, const std::string& format, u64 seed) {
  Prime p(prime);
  SSStar s = build_ss_star(level, p, seed);
  Fp K(p);
  if (format == "json") {
    nlohmann::json j;
    j["level"] = level;
    j["prime"] = prime;
    j["poly"] = poly_to_string(K, s.poly, "X");
    j["L"] = s.L;
    j["ext_modulus"] = poly_to_string(K, s.ext_modulus, "u");
    auto& arr = j["star_roots"] = nlohmann::json::array();
    for (const auto& r : s.star_roots) arr.push_back(fq_elem_to_string(r));
    j["counterexample"] = s.counterexample;
    if (!s.notes.empty()) j["notes"] = s.notes;
    std::cout << j.dump(2) << "\n";
    return s.counterexample ? 1 : 0;
  }
  std::cout << "ss_" << prime << "^(" << level << "*)(X) = " << poly_to_string(K, s.poly, "X")
            << "\n";
  std::cout << "F_{p^2} = F_p[u]/(" << poly_to_string(K, s.ext_modulus, "u") << ")\n";
  std::cout << "star roots (" << s.star_roots.size() << "): ";
  for (size_t i = 0; i < s.star_roots.size(); ++i)
    std::cout << (i ? ", " : "") << fq_elem_to_string(s.star_roots[i]);
  std::cout << "\nL = " << s.L << " base-field roots\n";
  if (s.counterexample) {
    std::cout << "COUNTEREXAMPLE: " << s.notes << "\n";
    return 1;
  }
  if (!s.notes.empty()) std::cout << "notes: " << s.notes << "\n";
  return 0;
}

int cmd_classnum(i64 disc, u64 field_m, u64 scount_l) {
  if (disc < 0) {
    std::cout << "h(" << disc << ") = " << order_class_number(disc) << "  (order)\n";
    return 0;
  }
  if (field_m > 0) {
    ClassCount c = field_class_number(field_m);
    std::cout << "h(Q(sqrt(-" << field_m << "))) = " << c.h << "  (fundamental disc " << c.disc
              << ")\n";
    return 0;
  }
  if (scount_l > 0) {
    Prime l(scount_l);
    std::cout << "S(F_" << scount_l << ") = " << S_count(l) << "\n";
    return 0;
  }
  std::cerr << "classnum: give one of --disc, --field, --scount\n";
  return 2;
}

int cmd_ss(u64 prime, const std::string& format) {
  Prime l(prime);
  Fp K(l);
  SupersingularData d = build_ss(l);
  RSTSplit rst = split_RST(l);
  if (format == "json") {
    nlohmann::json j;
    j["prime"] = prime;
    j["n"] = d.e.n;
    j["r"] = d.e.r;
    j["s"] = d.e.s;
    j["J"] = poly_to_string(K, d.J);
    j["ss"] = poly_to_string(K, d.ss);
    j["roots"] = d.base_roots;
    j["S_count"] = S_count(l);
    if (rst.R) j["R"] = poly_to_string(K, *rst.R);
    if (rst.S) j["S"] = poly_to_string(K, *rst.S);
    if (rst.T) j["T"] = poly_to_string(K, *rst.T);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "l = " << prime << ": n = " << d.e.n << ", r = " << d.e.r << ", s = " << d.e.s
            << "\n";
  std::cout << "J_l  = " << poly_to_string(K, d.J) << "\n";
  std::cout << "ss_l = " << poly_to_string(K, d.ss) << "\n";
  std::cout << "roots in F_l (" << d.base_roots.size() << " = S(F_l)): ";
  for (size_t i = 0; i < d.base_roots.size(); ++i)
    std::cout << (i ? ", " : "") << d.base_roots[i];
  std::cout << "\n";
  auto show = [&](const char* name, const std::optional<Poly<Fp>>& f, u64 h, bool plus1) {
    if (!f) return;
    std::cout << name << " = " << poly_to_string(K, *f) << "   (2 deg" << (plus1 ? " + 1" : "")
              << " = " << h << ")\n";
  };
  if (prime % 4 == 3) {
    show("R", rst.R, order_class_number(-static_cast<i64>(prime)), true);
    show("S", rst.S, order_class_number(-4 * static_cast<i64>(prime)), true);
  } else {
    show("T", rst.T, order_class_number(-4 * static_cast<i64>(prime)), false);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"supersingular polynomial and Tate-normal-form Hasse invariant verifier"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "sweep theorem checks over a prime range");
  std::string primes_arg = "7:997", theorem_arg, config_path;
  RunConfig cfg;
  std::string mod5_arg, mod7_arg, mod8_arg;
  verify->add_option("--primes", primes_arg, "inclusive prime range A:B");
  verify->add_option("--theorem", theorem_arg, "comma list of check ids (default: all)");
  std::string levels_arg = "2,3,5,7";
  verify->add_option("--levels", levels_arg, "Fricke levels for thm6.1");
  verify->add_option("--seed", cfg.seed, "PRNG seed");
  verify->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  verify->add_option("--out", cfg.out_path, "output path (default stdout)");
  verify->add_option("--workers", cfg.workers, "worker thread count");
  verify->add_option("--points", cfg.identity_points, "random points for identity checks");
  verify->add_flag("--strict-conjectures", cfg.strict_conjectures,
                   "conjecture rows affect the exit status");
  verify->add_option("--mod5", mod5_arg, "keep only primes with l mod 5 in this list");
  verify->add_option("--mod7", mod7_arg, "keep only primes with l mod 7 in this list");
  verify->add_option("--mod8", mod8_arg, "keep only primes with l mod 8 in this list");
  verify->add_option("--config", config_path, "key=value defaults file (flags win)");

  // hasse
  auto* hasse = app.add_subcommand("hasse", "build and factor a Hasse invariant");
  std::string curve = "e5", hformat = "text";
  int rep = 1;
  u64 hprime = 7, hseed = kDefaultSeed;
  bool print_factors = false;
  hasse->add_option("--curve", curve, "e5 or e7")->check(CLI::IsMember({"e5", "e7"}));
  hasse->add_option("--rep", rep, "E5 representation (1 or 2)")->check(CLI::Range(1, 2));
  hasse->add_option("--prime", hprime, "the prime l")->required();
  hasse->add_flag("--print-factors", print_factors, "list the irreducible factors");
  hasse->add_option("--format", hformat)->check(CLI::IsMember({"text", "json"}));
  hasse->add_option("--seed", hseed, "PRNG seed");

  // fricke
  auto* fricke = app.add_subcommand("fricke", "supersingular polynomial for a Fricke group");
  int level = 5;
  u64 fprime = 11, fseed = kDefaultSeed;
  std::string fformat = "text";
  fricke->add_option("--level", level, "N in {2,3,5,7}")->required();
  fricke->add_option("--prime", fprime, "the prime p (2 and 3 admitted)")->required();
  fricke->add_option("--format", fformat)->check(CLI::IsMember({"text", "json"}));
  fricke->add_option("--seed", fseed, "PRNG seed");

  // classnum
  auto* classnum = app.add_subcommand("classnum", "imaginary quadratic class numbers");
  i64 disc = 0;
  u64 field_m = 0, scount_l = 0;
  classnum->add_option("--disc", disc, "order class number at discriminant D < 0");
  classnum->add_option("--field", field_m, "field class number of Q(sqrt(-m)), m squarefree");
  classnum->add_option("--scount", scount_l, "supersingular count S(F_l)");

  // ss
  auto* ss = app.add_subcommand("ss", "supersingular polynomial data for a prime");
  u64 sprime = 11;
  std::string sformat = "text";
  ss->add_option("--prime", sprime, "the prime l")->required();
  ss->add_option("--format", sformat)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify) {
      if (!parse_range(primes_arg, cfg.lo, cfg.hi)) {
        std::cerr << "error: --primes wants A:B with A <= B\n";
        return 2;
      }
      if (!theorem_arg.empty())
        for (const auto& t : split_csv(theorem_arg)) cfg.theorems.push_back(t);
      if (verify->count("--levels")) {
        cfg.levels.clear();
        for (const auto& t : split_csv(levels_arg)) cfg.levels.push_back(std::stoi(t));
      }
      if (!config_path.empty()) {
        // the file supplies defaults; explicitly passed flags win
        RunConfig file_cfg;
        file_cfg.theorems.clear();
        file_cfg.levels.clear();
        if (auto err = apply_config_file(config_path, file_cfg)) {
          std::cerr << "error: " << *err << "\n";
          return 2;
        }
        if (!verify->count("--primes") && (file_cfg.lo != RunConfig{}.lo ||
                                           file_cfg.hi != RunConfig{}.hi)) {
          cfg.lo = file_cfg.lo;
          cfg.hi = file_cfg.hi;
        }
        if (!verify->count("--theorem") && !file_cfg.theorems.empty())
          cfg.theorems = file_cfg.theorems;
        if (!verify->count("--levels") && !file_cfg.levels.empty())
          cfg.levels = file_cfg.levels;
        if (!verify->count("--seed") && file_cfg.seed != RunConfig{}.seed)
          cfg.seed = file_cfg.seed;
        if (!verify->count("--format") && file_cfg.format != RunConfig{}.format)
          cfg.format = file_cfg.format;
        if (!verify->count("--out") && !file_cfg.out_path.empty())
          cfg.out_path = file_cfg.out_path;
        if (!verify->count("--workers") && file_cfg.workers != RunConfig{}.workers)
          cfg.workers = file_cfg.workers;
        if (!verify->count("--strict-conjectures") && file_cfg.strict_conjectures)
          cfg.strict_conjectures = true;
      }
      for (const auto& t : cfg.theorems) {
        if (!is_known_theorem_id(t)) {
          std::cerr << "error: unknown theorem id '" << t << "'; known:";
          for (const auto& k : known_theorem_ids()) std::cerr << " " << k;
          std::cerr << "\n";
          return 2;
        }
      }
      for (int N : cfg.levels)
        if (N != 2 && N != 3 && N != 5 && N != 7) {
          std::cerr << "error: levels must be among 2,3,5,7\n";
          return 2;
        }
      auto parse_mods = [](const std::string& s) -> std::optional<std::vector<unsigned>> {
        if (s.empty()) return std::nullopt;
        std::vector<unsigned> v;
        for (const auto& t : split_csv(s)) v.push_back(static_cast<unsigned>(std::stoul(t)));
        return v;
      };
      cfg.mod5_filter = parse_mods(mod5_arg);
      cfg.mod7_filter = parse_mods(mod7_arg);
      cfg.mod8_filter = parse_mods(mod8_arg);
      if (cfg.workers < 1) cfg.workers = 1;
      return cmd_verify(cfg);
    }
    if (*hasse) return cmd_hasse(curve, rep, hprime, print_factors, hformat, hseed);
    if (*fricke) return cmd_fricke(level, fprime, fformat, fseed);
    if (*classnum) return cmd_classnum(disc, field_m, scount_l);
    if (*ss) return cmd_ss(sprime, sformat);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
