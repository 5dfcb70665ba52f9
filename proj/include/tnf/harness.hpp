#ifndef TNF_HARNESS_HPP
#define TNF_HARNESS_HPP

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tnf/fricke.hpp"

namespace tnf {

extern const char* kToolVersion;

// Row schema is fixed: prime, theorem, mod4, mod5, mod7, mod8, mod20,
// observed, expected, pass, conjecture, ms.
struct ReportRow {
  u64 prime = 0;
  std::string theorem;
  unsigned mod4 = 0, mod5 = 0, mod7 = 0, mod8 = 0, mod20 = 0;
  std::string observed, expected;
  bool pass = false;
  bool conjecture = false;
  double ms = 0.0;
};

struct RunConfig {
  u64 lo = 7, hi = 997;
  std::vector<std::string> theorems;           // empty = all
  std::vector<int> levels = {2, 3, 5, 7};      // thm6.1 instances
  std::optional<std::vector<unsigned>> mod5_filter, mod7_filter, mod8_filter;
  u64 seed = kDefaultSeed;
  unsigned identity_points = 100;
  std::string format = "csv";                  // csv | json
  std::string out_path;                        // empty = stdout
  unsigned workers = 1;
  bool strict_conjectures = false;
};

const std::vector<std::string>& known_theorem_ids();
bool is_known_theorem_id(const std::string& id);

// Runs the selected verdicts over the sieved prime range. Rows are sorted by
// (prime, theorem) and identical for any worker count. Inapplicable
// (prime, theorem) combinations produce no row.
std::vector<ReportRow> run_verify(const RunConfig& cfg);

ReportRow row_from_verdict(const TheoremVerdict& v, double ms);

void write_csv(std::ostream& os, const std::vector<ReportRow>& rows);
void write_json(std::ostream& os, const RunConfig& cfg, const std::vector<ReportRow>& rows);

// exit code 0/1 semantics: conjecture rows gate only under strict
int exit_status(const std::vector<ReportRow>& rows, bool strict_conjectures);

// key=value defaults file; returns error text on malformed input
std::optional<std::string> apply_config_file(const std::string& path, RunConfig& cfg);

std::vector<u64> primes_in_range(u64 lo, u64 hi);

// minimal fixed-pool parallel map over [0, n)
void parallel_for(size_t n, unsigned workers, const std::function<void(size_t)>& fn);

std::string poly_to_string(const Fp& K, const Poly<Fp>& f, const std::string& var = "x");
std::string fq_elem_to_string(const Fq::Element& e, const std::string& var = "u");

}  // namespace tnf

#endif
