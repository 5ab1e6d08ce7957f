#pragma once

// Prime sweeps: per-prime check orchestration, a worker pool with an ordered
// collector, and JSON/CSV/text report writers.

#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "supercong/check_result.hpp"

namespace supercong {

// Accepted check tags, in report order.
const std::vector<std::string>& check_tags();

enum class ReportFormat { json, csv, text };

struct RunConfig {
  u64 pmin = 7;
  u64 pmax = 2000;
  std::vector<std::string> checks = check_tags();
  int jobs = 1;
  int guard = 2;
  ReportFormat format = ReportFormat::json;
  std::string out_path;  // empty: standard output
};

// Comma-separated tags, or "all". Throws std::invalid_argument on an unknown
// or empty tag. The result follows check_tags() order without duplicates.
std::vector<std::string> parse_checks(std::string_view list);
ReportFormat parse_format(std::string_view name);

// Throws std::invalid_argument when the config breaks its invariants.
void validate(const RunConfig& cfg);

// Ascending primes in [pmin, pmax] by a sieve of Eratosthenes.
std::vector<u64> enumerate_primes(u64 pmin, u64 pmax);

// All selected checks for one prime. Never throws: computation errors come
// back as rows with status error, out-of-bound checks as rows with status skip.
std::vector<CheckResult> check_prime(u64 p, const RunConfig& cfg);

// Even indices sampled by the per-prime Kummer check.
const std::vector<int>& kummer_samples();

struct RunSummary {
  std::size_t primes = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::size_t errors = 0;
  double seconds = 0.0;

  std::size_t total() const { return passed + failed + skipped + errors; }
  bool ok() const { return failed == 0 && errors == 0; }
  void add(const CheckResult& r);
};

// Runs check_prime over the range on cfg.jobs workers and hands the rows to
// sink in prime order (rows of one prime stay in check order).
RunSummary run_sweep(const RunConfig& cfg, const std::function<void(const CheckResult&)>& sink);

/// Streams rows as they arrive. Reports never contain timings, so equal
/// configurations produce byte-identical output.
class ReportWriter {
 public:
  ReportWriter(std::ostream& out, ReportFormat format);
  void row(const CheckResult& r);
  void finish(const RunSummary& summary);

 private:
  std::ostream& out_;
  ReportFormat format_;
  bool first_ = true;
};

// "N checks over K primes: a passed, b failed, c skipped, d errors".
std::string summary_line(const RunSummary& s);

}  // namespace supercong
