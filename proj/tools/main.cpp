// Command-line front end: prime sweeps plus single-value inspection commands.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "supercong/bernoulli.hpp"
#include "supercong/formulas.hpp"
#include "supercong/harness.hpp"
#include "supercong/oracles.hpp"

namespace sc = supercong;

namespace {

constexpr int kUsageError = 2;

std::string digits_string(const std::vector<sc::u64>& digits) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < digits.size(); ++i) out << (i ? ", " : "") << digits[i];
  out << "]";
  return out.str();
}

int run_verify(const sc::RunConfig& cfg) {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path, std::ios::out | std::ios::trunc);
    if (!file) {
      std::cerr << "error: cannot write report to " << cfg.out_path << "\n";
      return kUsageError;
    }
    out = &file;
  }
  sc::ReportWriter writer(*out, cfg.format);
  const sc::RunSummary summary = sc::run_sweep(cfg, [&](const sc::CheckResult& r) { writer.row(r); });
  writer.finish(summary);
  if (!cfg.out_path.empty() && !file) {
    std::cerr << "error: writing " << cfg.out_path << " failed\n";
    return kUsageError;
  }
  std::cerr << sc::summary_line(summary) << " in " << std::fixed << std::setprecision(2) << summary.seconds
            << " s\n";
  return summary.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wilson quotients and Fermat-quotient power sums modulo prime powers"};
  app.require_subcommand(1);

  sc::RunConfig cfg;
  std::string checks = "all";
  std::string format = "json";
  auto* verify = app.add_subcommand("verify", "Check every congruence over a range of primes");
  verify->add_option("--pmin", cfg.pmin, "Smallest prime considered")->required();
  verify->add_option("--pmax", cfg.pmax, "Largest prime considered")->required();
  verify->add_option("--checks", checks, "Comma-separated tags or 'all'")->capture_default_str();
  verify->add_option("--jobs", cfg.jobs, "Worker threads")->capture_default_str();
  verify->add_option("--guard", cfg.guard, "Extra p-adic digits for the Bernoulli engine")->capture_default_str();
  verify->add_option("--format", format, "json, csv or text")->capture_default_str();
  verify->add_option("--out", cfg.out_path, "Report path (default: standard output)");

  sc::u64 p = 0;
  int m = 0, prec = 0, guard = sc::kDefaultGuard, thm = 1;
  auto* bern = app.add_subcommand("bernoulli", "Divided Bernoulli number B̂̄_M mod P^R");
  bern->add_option("--p", p, "Odd prime")->required();
  bern->add_option("--m", m, "Index")->required();
  bern->add_option("--prec", prec, "Precision exponent R")->required();
  bern->add_option("--guard", guard, "Extra working digits")->capture_default_str();

  auto* wilson = app.add_subcommand("wilson", "(p-1)! and the Wilson quotient modulo prime powers");
  wilson->add_option("--p", p, "Odd prime")->required();
  wilson->add_option("--prec", prec, "Precision exponent R of W_p")->required();

  auto* omega = app.add_subcommand("omega", "The ω coefficients of (p-1)!");
  omega->add_option("--p", p, "Prime, at least 7 (--thm 1) or 11 (--thm 2)")->required();
  omega->add_option("--thm", thm, "1 or 2")->required()->check(CLI::IsMember({1, 2}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*verify) {
      try {
        cfg.checks = sc::parse_checks(checks);
        cfg.format = sc::parse_format(format);
        sc::validate(cfg);
      } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsageError;
      }
      return run_verify(cfg);
    }
    if (*bern) {
      sc::BernoulliEngine engine(p, guard);
      std::cout << engine.bnpd(m, prec).to_string() << "\n";
      return 0;
    }
    if (*wilson) {
      const sc::WilsonRecord rec = sc::wilson_quotient(p, prec);
      std::cout << "factorial_mod " << rec.factorial_mod.to_string() << " (mod " << p << "^" << prec + 1 << ")\n"
                << "wilson_quotient " << rec.wilson_quotient.to_string() << " (mod " << p << "^" << prec << ")\n"
                << "digits " << digits_string(rec.digits) << " (base " << p << ", least significant first)\n";
      return 0;
    }
    if (*omega) {
      const sc::DividedBernoulliSet set = sc::divided_set(p);
      const sc::OmegaVector w = thm == 1 ? sc::omega_thm1(set) : sc::omega_thm2(set);
      for (std::size_t v = 0; v < w.omegas.size(); ++v) {
        const sc::Residue& x = w.omegas[v];
        std::cout << "omega_" << v << " " << x.to_string() << " (mod " << p << "^" << x.precision() << ") digits "
                  << digits_string(x.digits()) << "\n";
      }
      const sc::Residue f = w.factorial_sum();
      std::cout << "factorial_sum " << f.to_string() << " (mod " << p << "^" << f.precision() << ")\n";
      return 0;
    }
  } catch (const sc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
