// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include <gmpxx.h>

#include "supercong/bernoulli.hpp"
#include "supercong/difference.hpp"
#include "supercong/formulas.hpp"
#include "supercong/harness.hpp"
#include "supercong/oracles.hpp"

using namespace supercong;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

struct Tally {
  RunSummary summary;
  std::size_t matched = 0;  // passing rows accepted by the filter
  std::string first_problem;
};

Tally sweep(const std::string& checks, u64 pmin, u64 pmax, const std::function<bool(const CheckResult&)>& filter) {
  RunConfig cfg;
  cfg.pmin = pmin;
  cfg.pmax = pmax;
  cfg.checks = parse_checks(checks);
  cfg.jobs = 8;
  Tally t;
  t.summary = run_sweep(cfg, [&](const CheckResult& r) {
    if (r.pass() && filter(r)) ++t.matched;
    if (r.counts_as_failure() && t.first_problem.empty()) {
      t.first_problem = "p=" + std::to_string(r.p) + " " + r.tag + " " + r.sub_case + ": " + r.lhs + " vs " + r.rhs +
                        " " + r.detail;
    }
  });
  return t;
}

std::size_t prime_count(u64 lo, u64 hi) { return enumerate_primes(lo, hi).size(); }

Outcome from_tally(const Tally& t, std::size_t expected) {
  Outcome o;
  o.ok = t.summary.ok() && t.matched == expected;
  o.note = summary_line(t.summary) + "; " + std::to_string(t.matched) + "/" + std::to_string(expected) + " required rows";
  if (!t.first_problem.empty()) o.note += "; first problem: " + t.first_problem;
  return o;
}

Outcome criterion1() {
  const Tally t = sweep("thm1", 7, 2000, [](const CheckResult& r) { return r.sub_case == "end-to-end"; });
  return from_tally(t, prime_count(7, 2000));
}

Outcome criterion2() {
  const Tally t = sweep("thm2", 11, 2000, [](const CheckResult& r) { return r.sub_case == "end-to-end"; });
  return from_tally(t, prime_count(11, 2000));
}

Outcome criterion3() {
  auto exact = [](const CheckResult& r, const char* level) {
    return r.sub_case.size() > 2 && r.sub_case.rfind("n=", 0) == 0 &&
           r.sub_case.substr(r.sub_case.find(',')) == std::string(",level=") + level;
  };
  const Tally t = sweep("thm3", 7, 2000, [&](const CheckResult& r) { return exact(r, "5") || exact(r, "6"); });
  return from_tally(t, 5 * prime_count(7, 2000) + 6 * prime_count(11, 2000));
}

Outcome criterion4() {
  Outcome o;
  const std::string w5 = wilson_quotient(5, 4).wilson_quotient.to_string();
  const std::string w7 = wilson_quotient(7, 4).wilson_quotient.to_string();
  const std::string w13 = wilson_quotient(13, 8).wilson_quotient.to_string();
  const std::string q7 = q_power_sum(1, 7, 5).to_string();
  o.ok = w5 == "5" && w7 == "103" && w13 == "36846277" && q7 == "9595";
  o.note = "W_5=" + w5 + " W_7=" + w7 + " W_13=" + w13 + " Q_7(1)=" + q7;
  return o;
}

Outcome criterion5() {
  const Tally t = sweep("props", 11, 500, [](const CheckResult&) { return true; });
  return from_tally(t, 11 * prime_count(11, 500));
}

Outcome criterion6() {
  Outcome o;
  std::string diff;
  const bool symbolic = psi_ptilde_consistency(&diff);
  std::size_t checked = 0, bad = 0;
  for (u64 p : enumerate_primes(3, 500)) {
    for (int r = 1; r <= 6 && static_cast<u64>(r) < p; ++r) {
      ++checked;
      if (!(wilson_via_psi(p, r) == wilson_quotient(p, r).wilson_quotient)) {
        if (bad++ == 0) o.note += "first mismatch p=" + std::to_string(p) + " r=" + std::to_string(r) + "; ";
      }
    }
  }
  o.ok = symbolic && bad == 0;
  o.note += std::to_string(checked - bad) + "/" + std::to_string(checked) + " (p, r) pairs; symbolic " +
            (symbolic ? "exact" : "mismatch " + diff);
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::size_t checked = 0, bad = 0;
  for (u64 p : {7, 11, 13, 17}) {
    BernoulliEngine engine(p);
    const long step = static_cast<long>(p) - 1;
    for (int r = 1; r <= 3; ++r) {
      const IndexedSequence f = [&](long v) { return engine.bnpd(v, r); };
      for (long n = 2; n <= 200; n += 2) {
        if (n % step == 0 || n <= r) continue;
        ++checked;
        if (!forward_difference(f, step, r, n).is_zero()) {
          if (bad++ == 0) o.note += "first failure p=" + std::to_string(p) + " n=" + std::to_string(n) + "; ";
        }
      }
      for (long k = 1; k <= 3; ++k) {
        if (p <= static_cast<u64>(r + k)) continue;
        ++checked;
        if (!forward_difference(f, step, r, k * step).is_zero()) {
          if (bad++ == 0) o.note += "first failure p=" + std::to_string(p) + " k=" + std::to_string(k) + "; ";
        }
      }
    }
  }
  std::size_t harness_rows = 0;
  bool harness_ok = true;
  for (u64 p : {7, 11, 13, 17}) {
    const Tally t = sweep("kummer", p, p, [](const CheckResult&) { return true; });
    harness_rows += t.matched;
    harness_ok = harness_ok && t.summary.ok() && t.matched > 0;
  }
  o.ok = bad == 0 && harness_ok;
  o.note += std::to_string(checked - bad) + "/" + std::to_string(checked) + " direct differences vanish; " +
            std::to_string(harness_rows) + " harness rows " + (harness_ok ? "pass" : "FAIL");
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t checked = 0, bad = 0;
  for (u64 p : enumerate_primes(11, 47)) {
    BernoulliEngine engine(p);
    const Modulus hi = make_modulus(p, 9);
    for (int m = 2; m <= 300; m += 2) {
      Residue x = rational_to_residue(exact_bernoulli(m) * Rational(static_cast<long>(p)), hi);
      if (m % static_cast<int>(p - 1) == 0) x = x + Residue::one(hi) - Residue(p, hi);
      ++checked;
      if (!(engine.bnp(m, 8) == shift_down(x, 1))) {
        if (bad++ == 0) o.note += "first mismatch p=" + std::to_string(p) + " m=" + std::to_string(m) + "; ";
      }
    }
  }
  o.ok = bad == 0;
  o.note += std::to_string(checked - bad) + "/" + std::to_string(checked) + " (p, m) pairs agree mod p^8";
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::size_t checked = 0, bad = 0;
  for (u64 p : enumerate_primes(11, 101)) {
    for (int k = 1; k <= 8; ++k) {
      for (int n = 1; n <= 8; ++n) {
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(k - 1), static_cast<unsigned long>(n - 1));
        if (k % 2 == 1) c = -c;
        mpz_class expect;
        mpz_fdiv_r_ui(expect.get_mpz_t(), c.get_mpz_t(), p);
        ++checked;
        if (binom_diff_mod_p(k, n, p).to_string() != expect.get_str()) ++bad;
      }
    }
  }
  o.ok = bad == 0;
  o.note = std::to_string(checked - bad) + "/" + std::to_string(checked) + " (p, k, n) triples";
  return o;
}

Outcome criterion10() {
  const Tally zero = sweep("zero-exprs", 11, 500, [](const CheckResult&) { return true; });
  const Tally table = sweep("table3", 11, 500, [](const CheckResult& r) {
    return r.sub_case.rfind("reduction.", 0) == 0;
  });
  Outcome o;
  o.ok = zero.summary.ok() && table.summary.ok() && zero.summary.passed > 0 && table.matched > 0;
  o.note = "zero-exprs: " + summary_line(zero.summary) + "; table3: " + summary_line(table.summary) + "; " +
           std::to_string(table.matched) + " reduction rows";
  if (!zero.first_problem.empty()) o.note += "; " + zero.first_problem;
  if (!table.first_problem.empty()) o.note += "; " + table.first_problem;
  return o;
}

std::string report(int jobs, ReportFormat format) {
  RunConfig cfg;
  cfg.pmin = 5;
  cfg.pmax = 400;
  cfg.jobs = jobs;
  cfg.format = format;
  std::ostringstream out;
  ReportWriter writer(out, format);
  writer.finish(run_sweep(cfg, [&](const CheckResult& r) { writer.row(r); }));
  return out.str();
}

Outcome criterion11() {
  Outcome o;
  const std::string a = report(1, ReportFormat::json);
  const std::string b = report(8, ReportFormat::json);
  const std::string c = report(8, ReportFormat::json);
  const bool csv = report(1, ReportFormat::csv) == report(8, ReportFormat::csv);
  o.ok = !a.empty() && a == b && b == c && csv;
  o.note = std::to_string(a.size()) + "-byte JSON report; jobs 1 vs 8 " + (a == b ? "identical" : "DIFFER") +
           "; repeated run " + (b == c ? "identical" : "DIFFERS") + "; CSV " + (csv ? "identical" : "DIFFERS");
  return o;
}

}  // namespace

int main() {
  const std::function<Outcome()> criteria[] = {criterion1, criterion2, criterion3, criterion4,  criterion5, criterion6,
                                                criterion7, criterion8, criterion9, criterion10, criterion11};
  int failures = 0;
  int index = 0;
  for (const auto& run : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.ok) ++failures;
    std::printf("criterion %d: %s (%.2f s) %s\n", index, o.ok ? "PASS" : "FAIL", secs, o.note.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
