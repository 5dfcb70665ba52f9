#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tnf/harness.hpp"

using namespace tnf;

namespace {

RunConfig small_cfg() {
  RunConfig cfg;
  cfg.lo = 7;
  cfg.hi = 60;
  cfg.theorems = {"thm1.1", "thm4.3", "sfl", "thm7.1"};
  return cfg;
}

// all fields except the timing column
std::vector<std::string> row_keys(const std::vector<ReportRow>& rows) {
  std::vector<std::string> out;
  for (const auto& r : rows)
    out.push_back(std::to_string(r.prime) + "|" + r.theorem + "|" + r.observed + "|" +
                  r.expected + "|" + (r.pass ? "1" : "0") + "|" + (r.conjecture ? "1" : "0"));
  return out;
}

}  // namespace

TEST_CASE("row sets are identical for serial and parallel runs") {
  RunConfig a = small_cfg();
  RunConfig b = small_cfg();
  b.workers = 4;
  CHECK(row_keys(run_verify(a)) == row_keys(run_verify(b)));
}

TEST_CASE("same seed and config reproduce the same rows") {
  RunConfig a = small_cfg();
  a.seed = 777;
  CHECK(row_keys(run_verify(a)) == row_keys(run_verify(a)));
}

TEST_CASE("rows are sorted by prime then theorem and carry residue tags") {
  auto rows = run_verify(small_cfg());
  REQUIRE(!rows.empty());
  for (size_t i = 1; i < rows.size(); ++i) {
    bool ordered = rows[i - 1].prime < rows[i].prime ||
                   (rows[i - 1].prime == rows[i].prime &&
                    rows[i - 1].theorem < rows[i].theorem);
    CHECK(ordered);
  }
  for (const auto& r : rows) {
    CHECK(r.mod4 == r.prime % 4);
    CHECK(r.mod20 == r.prime % 20);
  }
}

TEST_CASE("CSV and JSON outputs carry identical row data") {
  RunConfig cfg = small_cfg();
  auto rows = run_verify(cfg);
  std::ostringstream csv, json;
  write_csv(csv, rows);
  write_json(json, cfg, rows);

  // parse both back
  std::vector<std::string> from_csv;
  {
    std::istringstream in(csv.str());
    std::string line;
    std::getline(in, line);  // header
    CHECK(line == "prime,theorem,mod4,mod5,mod7,mod8,mod20,observed,expected,pass,conjecture,ms");
    while (std::getline(in, line)) {
      std::vector<std::string> cells;
      std::stringstream ss(line);
      std::string tok;
      while (std::getline(ss, tok, ',')) cells.push_back(tok);
      REQUIRE(cells.size() == 12);
      from_csv.push_back(cells[0] + "|" + cells[1] + "|" + cells[7] + "|" + cells[8] + "|" +
                         cells[9] + "|" + cells[10]);
    }
  }
  std::vector<std::string> from_json;
  {
    auto j = nlohmann::json::parse(json.str());
    CHECK(j["header"]["seed"] == cfg.seed);
    for (const auto& r : j["rows"]) {
      std::string obs = r["observed"], exp = r["expected"];
      for (auto& ch : obs) if (ch == ',') ch = ';';
      for (auto& ch : exp) if (ch == ',') ch = ';';
      from_json.push_back(std::to_string(r["prime"].get<u64>()) + "|" +
                          r["theorem"].get<std::string>() + "|" + obs + "|" + exp + "|" +
                          (r["pass"].get<bool>() ? "1" : "0") + "|" +
                          (r["conjecture"].get<bool>() ? "1" : "0"));
    }
  }
  CHECK(from_csv == from_json);
}

TEST_CASE("exit status semantics") {
  ReportRow ok{7, "x", 3, 2, 0, 7, 7, "1", "1", true, false, 0.0};
  ReportRow bad = ok;
  bad.pass = false;
  ReportRow bad_conj = bad;
  bad_conj.conjecture = true;
  CHECK(exit_status({ok}, false) == 0);
  CHECK(exit_status({ok, bad}, false) == 1);
  CHECK(exit_status({ok, bad_conj}, false) == 0);
  CHECK(exit_status({ok, bad_conj}, true) == 1);
}

TEST_CASE("unknown theorem ids are rejected") {
  RunConfig cfg = small_cfg();
  cfg.theorems = {"thm9.9"};
  CHECK_THROWS_AS(run_verify(cfg), std::invalid_argument);
}

TEST_CASE("residue filters restrict the prime set") {
  RunConfig cfg = small_cfg();
  cfg.theorems = {"sfl"};
  cfg.mod5_filter = {{4u}};
  for (const auto& r : run_verify(cfg)) CHECK(r.prime % 5 == 4);
}

TEST_CASE("thm6.1 emits one row per level and skips p = N") {
  RunConfig cfg;
  cfg.lo = 2;
  cfg.hi = 13;
  cfg.theorems = {"thm6.1"};
  auto rows = run_verify(cfg);
  unsigned n2 = 0;
  for (const auto& r : rows) {
    CHECK(r.pass);
    if (r.theorem == "thm6.1[N=2]") {
      CHECK(r.prime != 2);
      ++n2;
    }
  }
  CHECK(n2 == 5);  // 3, 5, 7, 11, 13
}

TEST_CASE("config file defaults with flag precedence semantics") {
  RunConfig cfg;
  std::string path = "tnf_test_config.txt";
  {
    std::ofstream out(path);
    out << "# comment\nprimes=11:31\ntheorem=sfl\nseed=99\nworkers=2\n";
  }
  auto err = apply_config_file(path, cfg);
  CHECK_FALSE(err.has_value());
  CHECK(cfg.lo == 11);
  CHECK(cfg.hi == 31);
  CHECK(cfg.theorems == std::vector<std::string>{"sfl"});
  CHECK(cfg.seed == 99);
  CHECK(cfg.workers == 2);
  {
    std::ofstream out(path);
    out << "nonsense\n";
  }
  CHECK(apply_config_file(path, cfg).has_value());
  std::remove(path.c_str());
}

TEST_CASE("poly_to_string formatting") {
  Fp K(Prime(11));
  CHECK(poly_to_string(K, poly_from_ints(K, {-1, 0, 1})) == "x^2 + 10");
  CHECK(poly_to_string(K, poly_zero<Fp>()) == "0");
  CHECK(poly_to_string(K, poly_from_ints(K, {0, 1})) == "x");
}
