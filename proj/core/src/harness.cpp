#include "supercong/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "supercong/bernoulli.hpp"
#include "supercong/difference.hpp"
#include "supercong/formulas.hpp"
#include "supercong/oracles.hpp"

namespace supercong {

namespace {

std::string case_n_level(int n, int level) {
  return "n=" + std::to_string(n) + ",level=" + std::to_string(level);
}

// Runs body, turning any exception into an error row for the whole group.
template <typename Body>
void guarded(std::vector<CheckResult>& out, u64 p, const std::string& tag, const std::string& sub_case,
             Body&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    out.push_back(errored(p, tag, sub_case, e.what()));
  }
}

void check_thm(std::vector<CheckResult>& out, u64 p, int theorem, const DividedBernoulliSet& set) {
  const std::string tag = theorem == 1 ? "thm1" : "thm2";
  const OmegaVector w = theorem == 1 ? omega_thm1(set) : omega_thm2(set);
  const Residue fact = factorial_mod(p, w.top);
  for (int k = 1; k < w.top; ++k) {
    out.push_back(compare_residues(p, tag, "omega" + std::to_string(k), w.partial_factorial_sum(k),
                                   fact.reduce(k + 1)));
  }
  out.push_back(compare_residues(p, tag, "end-to-end", w.factorial_sum(), fact));
}

void check_thm3(std::vector<CheckResult>& out, u64 p, const DividedBernoulliSet& set,
                const std::vector<Residue>& qt5, const std::vector<Residue>& qt6) {
  const std::string tag = "thm3";
  for (int n = 1; n <= 5; ++n) {
    guarded(out, p, tag, case_n_level(n, 5), [&] {
      out.push_back(compare_residues(p, tag, case_n_level(n, 5), qt5[n - 1], qp_rhs_thm3(n, 5, set)));
    });
  }
  guarded(out, p, tag, "n=5,level=5,lead=p-1", [&] {
    out.push_back(compare_residues(p, tag, "n=5,level=5,lead=p-1", qt5[4],
                                   qp_rhs_thm3(5, 5, set, Lead::p_minus_one)));
  });
  if (p < 11) {
    out.push_back(skipped(p, tag, "level=6", "needs p >= 11"));
    return;
  }
  for (int n = 1; n <= 6; ++n) {
    guarded(out, p, tag, case_n_level(n, 6), [&] {
      out.push_back(compare_residues(p, tag, case_n_level(n, 6), qt6[n - 1], qp_rhs_thm3(n, 6, set)));
    });
  }
  for (int n = 1; n <= 5; ++n) {
    const std::string name = "n=" + std::to_string(n) + ",level=6->5";
    guarded(out, p, tag, name, [&] {
      out.push_back(compare_residues(p, tag, name, qp_rhs_thm3(n, 6, set).reduce(5), qp_rhs_thm3(n, 5, set)));
    });
  }
}

void check_props(std::vector<CheckResult>& out, u64 p, const DividedBernoulliSet& set,
                 const std::vector<Residue>& qt5, const std::vector<Residue>& qt6) {
  const std::string tag = "props";
  for (int n = 1; n <= 5; ++n) {
    guarded(out, p, tag, case_n_level(n, 5), [&] {
      out.push_back(compare_residues(p, tag, case_n_level(n, 5), qt5[n - 1], qp_rhs_props(n, 5, set)));
    });
  }
  if (p < 11) {
    out.push_back(skipped(p, tag, "level=6", "needs p >= 11"));
    return;
  }
  for (int n = 1; n <= 6; ++n) {
    guarded(out, p, tag, case_n_level(n, 6), [&] {
      out.push_back(compare_residues(p, tag, case_n_level(n, 6), qt6[n - 1], qp_rhs_props(n, 6, set)));
    });
  }
}

void check_lemmas(std::vector<CheckResult>& out, u64 p, const DividedBernoulliSet& set,
                  const std::vector<Residue>& qt5, const std::vector<Residue>& qt6) {
  const std::string tag = "lemmas";
  for (int level : {5, 6}) {
    if (level == 6 && p < 11) {
      out.push_back(skipped(p, tag, "level=6", "needs p >= 11"));
      break;
    }
    const auto& direct = level == 5 ? qt5 : qt6;
    for (int n = 1; n <= level; ++n) {
      const std::string base = case_n_level(n, level);
      guarded(out, p, tag, base, [&] {
        const Residue lemma = qtilde_lemma(n, level, set);
        out.push_back(compare_residues(p, tag, base, direct[n - 1], lemma));
        out.push_back(compare_residues(p, tag, base + ",vs=thm3", lemma, qp_rhs_thm3(n, level, set)));
        out.push_back(compare_residues(p, tag, base + ",vs=props", lemma, qp_rhs_props(n, level, set)));
      });
    }
  }
}

void check_psi(std::vector<CheckResult>& out, u64 p) {
  const std::string tag = "psi";
  const Residue w = wilson_quotient(p, 6).wilson_quotient;
  for (int r = 1; r <= 6; ++r) {
    const std::string name = "r=" + std::to_string(r);
    if (p <= static_cast<u64>(r)) {
      out.push_back(skipped(p, tag, name, "needs p > r"));
      continue;
    }
    guarded(out, p, tag, name, [&] {
      out.push_back(compare_residues(p, tag, name, wilson_via_psi(p, r), w.reduce(r)));
      out.push_back(compare_residues(p, tag, name + ",form=psi", wilson_via_psi_direct(p, r), w.reduce(r)));
    });
  }
}

void check_kummer(std::vector<CheckResult>& out, u64 p, BernoulliEngine& engine) {
  const std::string tag = "kummer";
  if (p < 5) {
    out.push_back(skipped(p, tag, "all", "needs p >= 5"));
    return;
  }
  const long step = static_cast<long>(p) - 1;
  auto vanishing = [&](const std::string& name, long n, int r) {
    guarded(out, p, tag, name, [&] {
      const IndexedSequence bbar = [&](long m) { return engine.bnpd(m, r); };
      const Residue d = forward_difference(bbar, step, r, n);
      out.push_back(compare_residues(p, tag, name, d, Residue::zero(d.modulus())));
    });
  };
  for (int r = 1; r <= 3; ++r) {
    for (int n : kummer_samples()) {
      if (n <= r || n % step == 0) continue;
      vanishing("case1,r=" + std::to_string(r) + ",n=" + std::to_string(n), n, r);
    }
  }
  for (int r = 1; r <= 3; ++r) {
    for (int k = 1; k <= 3; ++k) {
      const std::string name = "case2,r=" + std::to_string(r) + ",k=" + std::to_string(k);
      if (p <= static_cast<u64>(r + k)) {
        out.push_back(skipped(p, tag, name, "needs p > r + k"));
        continue;
      }
      vanishing(name, k * step, r);
    }
  }
}

}  // namespace

const std::vector<std::string>& check_tags() {
  static const std::vector<std::string> tags = {"thm1", "thm2", "thm3", "props", "lemmas",
                                                "psi", "kummer", "zero-exprs", "table3"};
  return tags;
}

const std::vector<int>& kummer_samples() {
  static const std::vector<int> samples = {2, 4, 6, 8, 10, 12, 14, 16, 20, 26, 32, 46, 64, 100, 136, 200};
  return samples;
}

std::vector<std::string> parse_checks(std::string_view list) {
  std::vector<bool> want(check_tags().size(), false);
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = list.find(',', start);
    std::string_view item = list.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) throw std::invalid_argument("empty entry in check list");
    if (item == "all") {
      std::fill(want.begin(), want.end(), true);
    } else {
      const auto& tags = check_tags();
      const auto it = std::find(tags.begin(), tags.end(), item);
      if (it == tags.end()) throw std::invalid_argument("unknown check '" + std::string(item) + "'");
      want[static_cast<std::size_t>(it - tags.begin())] = true;
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < want.size(); ++i) {
    if (want[i]) out.push_back(check_tags()[i]);
  }
  return out;
}

ReportFormat parse_format(std::string_view name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  if (name == "text") return ReportFormat::text;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

void validate(const RunConfig& cfg) {
  if (cfg.pmin < 2) throw std::invalid_argument("pmin must be >= 2");
  if (cfg.pmin > cfg.pmax) throw std::invalid_argument("pmin must not exceed pmax");
  if (cfg.jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  if (cfg.guard < 1) throw std::invalid_argument("guard must be >= 1");
}

std::vector<u64> enumerate_primes(u64 pmin, u64 pmax) {
  std::vector<u64> out;
  if (pmax < 2 || pmin > pmax) return out;
  std::vector<bool> composite(pmax + 1, false);
  for (u64 i = 2; i * i <= pmax; ++i) {
    if (composite[i]) continue;
    for (u64 j = i * i; j <= pmax; j += i) composite[j] = true;
  }
  for (u64 i = std::max<u64>(pmin, 2); i <= pmax; ++i) {
    if (!composite[i]) out.push_back(i);
  }
  return out;
}

std::vector<CheckResult> check_prime(u64 p, const RunConfig& cfg) {
  std::vector<CheckResult> out;
  if (p == 2) {
    for (const auto& tag : cfg.checks) out.push_back(skipped(p, tag, "all", "only odd primes are supported"));
    return out;
  }

  std::optional<BernoulliEngine> engine;
  std::optional<DividedBernoulliSet> set;
  std::vector<Residue> qt5, qt6;
  std::string setup_error;
  auto needs_set = [&](const std::string& tag) {
    return tag == "thm1" || tag == "thm2" || tag == "thm3" || tag == "props" || tag == "lemmas" ||
           tag == "zero-exprs" || tag == "table3";
  };
  const bool any_set = std::any_of(cfg.checks.begin(), cfg.checks.end(), needs_set);
  try {
    engine.emplace(p, cfg.guard);
    if (any_set && p >= 7) {
      set = divided_set(*engine, PrecisionRequest::mod_p7_factorial());
      qt5 = q_tilde(5, p, 5);
      if (p >= 11) qt6 = q_tilde(6, p, 6);
    }
  } catch (const std::exception& e) {
    setup_error = e.what();
  }

  for (const auto& tag : cfg.checks) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t first = out.size();
    if (needs_set(tag) && p < 7) {
      out.push_back(skipped(p, tag, "all", "needs p >= 7"));
      continue;
    }
    if (tag == "thm2" && p < 11) {
      out.push_back(skipped(p, tag, "all", "needs p >= 11"));
      continue;
    }
    if (!setup_error.empty() && (needs_set(tag) || !engine)) {
      out.push_back(errored(p, tag, "setup", setup_error));
      continue;
    }
    guarded(out, p, tag, "all", [&] {
      if (tag == "thm1") check_thm(out, p, 1, *set);
      else if (tag == "thm2") check_thm(out, p, 2, *set);
      else if (tag == "thm3") check_thm3(out, p, *set, qt5, qt6);
      else if (tag == "props") check_props(out, p, *set, qt5, qt6);
      else if (tag == "lemmas") check_lemmas(out, p, *set, qt5, qt6);
      else if (tag == "psi") check_psi(out, p);
      else if (tag == "kummer") check_kummer(out, p, *engine);
      else if (tag == "zero-exprs") {
        for (auto& r : zero_expression_suite(*set)) out.push_back(std::move(r));
      } else if (tag == "table3") {
        for (auto& r : table3_suite(*set)) out.push_back(std::move(r));
      }
    });
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    for (std::size_t i = first; i < out.size(); ++i) out[i].elapsed_ms = ms / static_cast<double>(out.size() - first);
  }
  return out;
}

void RunSummary::add(const CheckResult& r) {
  switch (r.status) {
    case CheckStatus::pass: ++passed; break;
    case CheckStatus::fail: ++failed; break;
    case CheckStatus::skip: ++skipped; break;
    case CheckStatus::error: ++errors; break;
  }
}

RunSummary run_sweep(const RunConfig& cfg, const std::function<void(const CheckResult&)>& sink) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  const std::vector<u64> primes = enumerate_primes(cfg.pmin, cfg.pmax);
  RunSummary summary;
  summary.primes = primes.size();

  std::vector<std::optional<std::vector<CheckResult>>> slots(primes.size());
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= primes.size()) return;
      std::vector<CheckResult> rows = check_prime(primes[i], cfg);
      {
        std::lock_guard lock(mutex);
        slots[i] = std::move(rows);
      }
      ready.notify_all();
    }
  };

  const int workers = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(primes.size())));
  std::vector<std::thread> pool;
  for (int t = 0; t < workers && !primes.empty(); ++t) pool.emplace_back(worker);

  // Ordered collector: emit prime i only after primes 0..i-1.
  for (std::size_t i = 0; i < primes.size(); ++i) {
    std::vector<CheckResult> rows;
    {
      std::unique_lock lock(mutex);
      ready.wait(lock, [&] { return slots[i].has_value(); });
      rows = std::move(*slots[i]);
      slots[i].reset();
    }
    for (const auto& r : rows) {
      summary.add(r);
      sink(r);
    }
  }
  for (auto& t : pool) t.join();
  summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

ReportWriter::ReportWriter(std::ostream& out, ReportFormat format) : out_(out), format_(format) {
  if (format_ == ReportFormat::json) out_ << "[";
  if (format_ == ReportFormat::csv) out_ << "p,tag,case,lhs,rhs,modulus,pass,status,detail\n";
}

void ReportWriter::row(const CheckResult& r) {
  switch (format_) {
    case ReportFormat::json: {
      nlohmann::ordered_json j;
      j["p"] = r.p;
      j["tag"] = r.tag;
      j["case"] = r.sub_case;
      j["lhs"] = r.lhs;
      j["rhs"] = r.rhs;
      j["modulus"] = r.modulus;
      j["pass"] = r.pass();
      j["status"] = status_name(r.status);
      j["detail"] = r.detail;
      out_ << (first_ ? "\n  " : ",\n  ") << j.dump();
      break;
    }
    case ReportFormat::csv:
      out_ << r.p << ',' << csv_field(r.tag) << ',' << csv_field(r.sub_case) << ',' << r.lhs << ',' << r.rhs << ','
           << r.modulus << ',' << (r.pass() ? "true" : "false") << ',' << status_name(r.status) << ','
           << csv_field(r.detail) << '\n';
      break;
    case ReportFormat::text:
      if (r.counts_as_failure()) {
        out_ << (r.status == CheckStatus::fail ? "FAIL" : "ERROR") << " p=" << r.p << ' ' << r.tag << ' '
             << r.sub_case;
        if (r.status == CheckStatus::fail) out_ << ": " << r.lhs << " != " << r.rhs << " mod " << r.modulus;
        if (!r.detail.empty()) out_ << " (" << r.detail << ')';
        out_ << '\n';
      }
      break;
  }
  first_ = false;
}

void ReportWriter::finish(const RunSummary& summary) {
  if (format_ == ReportFormat::json) out_ << (first_ ? "]\n" : "\n]\n");
  if (format_ == ReportFormat::text) out_ << summary_line(summary) << '\n';
  out_.flush();
}

std::string summary_line(const RunSummary& s) {
  std::ostringstream out;
  out << s.total() << " checks over " << s.primes << " primes: " << s.passed << " passed, " << s.failed
      << " failed, " << s.skipped << " skipped, " << s.errors << " errors";
  return out.str();
}

}  // namespace supercong
