#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "evilnum/decimal.hpp"
#include "evilnum/experiments.hpp"
#include "evilnum/gf.hpp"
#include "evilnum/scan.hpp"

namespace {

using namespace evilnum;
using experiments::Report;

void emit(const Report& rep, const std::string& format, const std::string& out_path) {
  std::string text = rep.render(format);
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot open output path: " + out_path);
  out << text;
}

// double factorial (i-1)!! — the Gaussian target for even scaled moments
long gauss_target(unsigned i) {
  long t = 1;
  for (long j = static_cast<long>(i) - 1; j > 1; j -= 2) t *= j;
  return t;
}

Report report_prob(long b, long n, long digits) {
  BigRational a = gf::hit_probability(b, n);
  Report rep;
  rep.id = "prob";
  rep.params.push_back({"base", std::to_string(b)});
  rep.params.push_back({"target", std::to_string(n)});
  rep.params.push_back({"digits", std::to_string(digits)});
  rep.aggregates.push_back({"probability", a.to_string()});
  rep.aggregates.push_back({"probability_decimal",
                            decimal_fixed_width(a, static_cast<size_t>(digits))});
  if (!a.is_zero())
    rep.aggregates.push_back({"reciprocal_decimal",
                              decimal_fixed_width(BigRational(1) / a, static_cast<size_t>(digits))});
  return rep;
}

Report report_moments(long b, long n, unsigned imax, unsigned digits) {
  auto m = gf::conditional_moments(b, n, imax, digits);
  Report rep;
  rep.id = "moments";
  rep.params.push_back({"base", std::to_string(b)});
  rep.params.push_back({"target", std::to_string(n)});
  rep.params.push_back({"imax", std::to_string(imax)});
  rep.params.push_back({"digits", std::to_string(digits)});
  rep.columns = {"i", "raw", "central", "scaled", "gaussian_target"};
  for (unsigned i = 0; i <= imax; ++i) {
    std::string target = "-";
    if (i >= 3) target = i % 2 ? "0" : std::to_string(gauss_target(i));
    rep.rows.push_back({std::to_string(i), decimal_truncate(m.raw[i], digits),
                        decimal_truncate(m.central[i], digits), m.scaled[i], target});
  }
  rep.aggregates.push_back({"mean", decimal_truncate(m.raw[1], digits)});
  rep.aggregates.push_back({"variance", decimal_truncate(m.central[2], digits)});
  return rep;
}

Report report_scan(const std::string& spec, long b, long n, scans::ScanMode mode,
                   long precision_mult) {
  auto c = streams::parse_constant(spec);
  auto r = scans::scan_constant(c, b, n, mode, precision_mult);
  Report rep;
  rep.id = "scan";
  rep.params.push_back({"constant", streams::to_string(c)});
  rep.params.push_back({"base", std::to_string(b)});
  rep.params.push_back({"target", std::to_string(n)});
  rep.params.push_back({"mode", scans::to_string(mode)});
  rep.columns = {"verdict", "location", "digits_consumed", "final_sum"};
  rep.rows.push_back({r.evil ? "evil" : "not_evil", r.evil ? std::to_string(r.location) : "-",
                      std::to_string(r.digits_consumed), std::to_string(r.final_sum)});
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"evilnum: exact arithmetic of digit partial-sum hitting times"};
  app.require_subcommand(1);

  long base = 10;
  long target = 666;
  std::string format = "human";
  std::string out_path;
  std::string mode_name = "generalized";
  long precision_mult = 1;

  auto add_common = [&](CLI::App* cmd, bool with_mode) {
    cmd->add_option("--base,-b", base, "digit base, 2..36")->check(CLI::Range(2, 36));
    cmd->add_option("--target,-n", target, "partial-sum target n >= 0")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"human", "tsv", "json"}));
    cmd->add_option("--out", out_path, "write the report to this path instead of stdout");
    if (with_mode)
      cmd->add_option("--mode", mode_name, "generalized | fractional-only");
  };

  long digits = 91;
  auto* prob = app.add_subcommand("prob", "exact hitting probability a_b(n) and its reciprocal");
  add_common(prob, false);
  prob->add_option("--digits,-d", digits, "total decimal length to print")
      ->check(CLI::Range(1, 100000));

  unsigned imax = 8;
  unsigned mdigits = 50;
  auto* moments = app.add_subcommand("moments", "exact conditional moments of the evil location");
  add_common(moments, false);
  moments->add_option("--imax,-i", imax, "highest moment order, >= 2")->check(CLI::Range(2, 64));
  moments->add_option("--digits,-d", mdigits, "decimals for rendered moments")
      ->check(CLI::Range(1, 10000));

  std::vector<std::string> spec_words;
  auto* scan = app.add_subcommand("scan", "scan one constant for evilness");
  add_common(scan, true);
  scan->add_option("constant", spec_words,
                   "constant spec: pi | e | golden | golden-1 | champernowne | sqrt <m> | "
                   "rational <p>/<q> | <k>*pi | pi*sqrt <m> | file <path>")
      ->required()
      ->expected(-1);
  scan->add_option("--precision-mult", precision_mult, "scale the initial certified-digit budget")
      ->check(CLI::Range(1L, 1000000L));

  std::string experiment_id;
  experiments::RunOptions opt;
  auto* exp = app.add_subcommand("experiment", "reproduce a published experiment");
  add_common(exp, true);
  exp->add_option("id", experiment_id, "primes-pi | pi-sqrt | golden | normality-mc")->required();
  exp->add_option("--count", opt.count, "primes-pi: number of primes")
      ->check(CLI::Range(1L, 10000000L));
  exp->add_option("--xmax", opt.xmax, "pi-sqrt: scan x = 1..xmax")
      ->check(CLI::Range(1L, 10000000L));
  exp->add_option("--trials", opt.trials, "normality-mc: sample size")
      ->check(CLI::Range(1L, 1000000000L));
  exp->add_option("--seed", opt.seed, "normality-mc: RNG seed");
  exp->add_option("--workers", opt.workers, "worker threads (0 = hardware)");
  exp->add_option("--precision-mult", precision_mult, "scale the initial certified-digit budget")
      ->check(CLI::Range(1L, 1000000L));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    Report rep;
    if (prob->parsed()) {
      rep = report_prob(base, target, digits);
    } else if (moments->parsed()) {
      rep = report_moments(base, target, imax, mdigits);
    } else if (scan->parsed()) {
      std::string spec;
      for (const auto& w : spec_words) spec += (spec.empty() ? "" : " ") + w;
      rep = report_scan(spec, base, target, scans::parse_scan_mode(mode_name), precision_mult);
    } else {
      opt.base = base;
      opt.target = target;
      opt.mode = scans::parse_scan_mode(mode_name);
      opt.precision_mult = precision_mult;
      rep = experiments::run_experiment(experiment_id, opt);
    }
    emit(rep, format, out_path);
  } catch (const streams::CertificationError& e) {
    std::cerr << "certification failure: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
