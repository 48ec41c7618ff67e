#include "evilnum/experiments.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "evilnum/decimal.hpp"
#include "evilnum/gf.hpp"
#include "evilnum/isqrt.hpp"

namespace evilnum::experiments {

using scans::ScanMode;
using scans::ScanResult;
using streams::ConstantDescriptor;

std::vector<long> first_primes(long count) {
  if (count < 0 || count > 10000000) throw std::invalid_argument("first_primes: bad count");
  std::vector<long> primes;
  if (count == 0) return primes;
  primes.reserve(count);
  // p_k < k(ln k + ln ln k) for k >= 6; grow if the estimate ever falls short
  long limit = 100;
  if (count >= 6) {
    double k = static_cast<double>(count);
    limit = static_cast<long>(k * (std::log(k) + std::log(std::log(k)))) + 10;
  }
  while (true) {
    std::vector<bool> composite(limit + 1, false);
    for (long p = 2; p * p <= limit; ++p)
      if (!composite[p])
        for (long q = p * p; q <= limit; q += p) composite[q] = true;
    primes.clear();
    for (long p = 2; p <= limit && static_cast<long>(primes.size()) < count; ++p)
      if (!composite[p]) primes.push_back(p);
    if (static_cast<long>(primes.size()) == count) return primes;
    limit *= 2;
  }
}

namespace {

std::string verdict_str(const ScanResult& r) { return r.evil ? "evil" : "not_evil"; }
std::string location_str(const ScanResult& r) { return r.evil ? std::to_string(r.location) : "-"; }

void echo_common(Report& rep, const RunOptions& opt) {
  rep.params.push_back({"base", std::to_string(opt.base)});
  rep.params.push_back({"target", std::to_string(opt.target)});
}

// evil fraction and mean location, exact and decimal
void push_scan_aggregates(Report& rep, const scans::BatchAggregates& agg) {
  rep.aggregates.push_back({"total", std::to_string(agg.total)});
  rep.aggregates.push_back({"evil_count", std::to_string(agg.evil_count)});
  rep.aggregates.push_back({"evil_fraction", std::to_string(agg.evil_count) + "/" +
                                                 std::to_string(agg.total)});
  rep.aggregates.push_back({"evil_fraction_decimal", decimal_truncate(agg.evil_fraction, 10)});
  if (agg.evil_count > 0) {
    rep.aggregates.push_back({"mean_location", agg.mean_location.to_string()});
    // the published experiments render means to 10 significant digits; both
    // truncated and half-up rounded forms are emitted
    rep.aggregates.push_back({"mean_location_truncated", sig_figs_truncate(agg.mean_location, 10)});
    rep.aggregates.push_back({"mean_location_rounded", sig_figs_round(agg.mean_location, 10)});
  }
}

void time_meta(Report& rep, std::chrono::steady_clock::time_point t0) {
  auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << dt;
  rep.meta.push_back({"runtime_seconds", os.str()});
}

// sign(m_i) * sqrt(m_i^2 / var^i) as a truncated decimal: the scaled moment
// m_i / var^{i/2} for odd i without leaving exact arithmetic
std::string odd_scaled_decimal(const BigRational& central_i, const BigRational& var, unsigned i,
                               unsigned digits) {
  if (var.is_zero()) return "0";  // degenerate sample
  BigRational sq = central_i * central_i / var.pow(static_cast<long>(i));
  BigInt scaled = sqrt_floor_scaled(sq, digits);
  return decimal_place_point(scaled, digits, central_i.sign() < 0);
}

}  // namespace

Report run_primes_pi(const RunOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.id = "primes-pi";
  echo_common(rep, opt);
  rep.params.push_back({"mode", scans::to_string(opt.mode)});
  rep.params.push_back({"count", std::to_string(opt.count)});

  std::vector<long> primes = first_primes(opt.count);
  std::vector<ConstantDescriptor> members;
  members.reserve(primes.size());
  for (long p : primes) members.push_back(ConstantDescriptor::make_rational_times_pi(BigInt(p)));
  auto batch = scans::scan_batch(members, opt.base, opt.target, opt.mode, opt.workers,
                                 opt.precision_mult);

  rep.params.push_back({"last_prime", primes.empty() ? "-" : std::to_string(primes.back())});
  rep.columns = {"prime", "verdict", "location"};
  rep.rows.reserve(primes.size());
  for (size_t i = 0; i < primes.size(); ++i)
    rep.rows.push_back(
        {std::to_string(primes[i]), verdict_str(batch.results[i]), location_str(batch.results[i])});
  push_scan_aggregates(rep, batch.aggregates);
  time_meta(rep, t0);
  return rep;
}

Report run_pi_sqrt(const RunOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.id = "pi-sqrt";
  echo_common(rep, opt);
  rep.params.push_back({"mode", scans::to_string(opt.mode)});
  rep.params.push_back({"xmax", std::to_string(opt.xmax)});

  std::vector<ConstantDescriptor> members;
  members.reserve(opt.xmax);
  for (long x = 1; x <= opt.xmax; ++x)
    members.push_back(ConstantDescriptor::make_pi_times_sqrt(x));
  auto batch = scans::scan_batch(members, opt.base, opt.target, opt.mode, opt.workers,
                                 opt.precision_mult);

  rep.columns = {"x", "verdict", "location"};
  rep.rows.reserve(members.size());
  for (long x = 1; x <= opt.xmax; ++x) {
    const auto& r = batch.results[static_cast<size_t>(x - 1)];
    rep.rows.push_back({std::to_string(x), verdict_str(r), location_str(r)});
  }
  push_scan_aggregates(rep, batch.aggregates);
  time_meta(rep, t0);
  return rep;
}

Report run_golden(const RunOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.id = "golden";
  echo_common(rep, opt);

  struct Row {
    const char* constant;
    ScanMode mode;
  };
  const Row plan[] = {
      {"golden-1", ScanMode::generalized},
      {"golden", ScanMode::generalized},
      {"golden", ScanMode::fractional_only},
  };
  rep.columns = {"constant", "mode", "verdict", "location", "digits_consumed"};
  for (const auto& row : plan) {
    auto r = scans::scan_constant(streams::parse_constant(row.constant), opt.base, opt.target,
                                  row.mode, opt.precision_mult);
    rep.rows.push_back({row.constant, scans::to_string(row.mode), verdict_str(r), location_str(r),
                        std::to_string(r.digits_consumed)});
  }
  time_meta(rep, t0);
  return rep;
}

Report run_normality_mc(const RunOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.id = "normality-mc";
  echo_common(rep, opt);
  rep.params.push_back({"trials", std::to_string(opt.trials)});
  rep.params.push_back({"seed", std::to_string(opt.seed)});

  auto mc = scans::monte_carlo_scan(opt.base, opt.target, opt.trials, opt.seed);

  // sample central moments over the evil trials, exact over the sample
  BigRational mu = mc.mean_location;
  std::vector<BigRational> central(5);
  central[0] = BigRational(1);
  if (mc.evil_count > 0) {
    for (unsigned i = 2; i <= 4; ++i) {
      BigRational acc;
      for (size_t k = 1; k < mc.histogram.size(); ++k)
        if (mc.histogram[k] > 0)
          acc += BigRational(mc.histogram[k]) * (BigRational(static_cast<long>(k)) - mu).pow(i);
      central[i] = acc / BigRational(mc.evil_count);
    }
  }

  const unsigned digits = 12;
  auto exact = gf::conditional_moments(opt.base, opt.target, 4, digits);
  BigRational a = gf::hit_probability(opt.base, opt.target);

  rep.columns = {"statistic", "exact", "monte_carlo"};
  auto add = [&](const std::string& name, const std::string& ex, const std::string& got) {
    rep.rows.push_back({name, ex, got});
  };
  add("evil_fraction", decimal_truncate(a, digits), decimal_truncate(mc.evil_fraction, digits));
  add("mean_location", decimal_truncate(exact.raw[1], digits), decimal_truncate(mu, digits));
  add("variance", decimal_truncate(exact.central[2], digits), decimal_truncate(central[2], digits));
  add("skewness", exact.scaled[3], odd_scaled_decimal(central[3], central[2], 3, digits));
  add("kurtosis", exact.scaled[4],
      central[2].is_zero() ? "0"
                           : decimal_truncate(central[4] / (central[2] * central[2]), digits));

  rep.aggregates.push_back({"evil_count", std::to_string(mc.evil_count)});
  rep.aggregates.push_back({"evil_fraction", mc.evil_fraction.to_string()});
  if (mc.evil_count > 0)
    rep.aggregates.push_back({"mean_location", mc.mean_location.to_string()});
  time_meta(rep, t0);
  return rep;
}

Report run_experiment(const std::string& id, const RunOptions& opt) {
  if (id == "primes-pi") return run_primes_pi(opt);
  if (id == "pi-sqrt") return run_pi_sqrt(opt);
  if (id == "golden") return run_golden(opt);
  if (id == "normality-mc") return run_normality_mc(opt);
  throw std::invalid_argument("unknown experiment id: " + id);
}

std::vector<std::string> experiment_ids() {
  return {"primes-pi", "pi-sqrt", "golden", "normality-mc"};
}

std::string Report::to_human() const {
  std::ostringstream os;
  os << "experiment: " << id << "\n";
  for (const auto& f : params) os << "  " << f.key << " = " << f.value << "\n";
  if (!columns.empty()) {
    std::vector<size_t> width(columns.size());
    for (size_t c = 0; c < columns.size(); ++c) width[c] = columns[c].size();
    for (const auto& row : rows)
      for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    auto line = [&](const std::vector<std::string>& cells) {
      for (size_t c = 0; c < cells.size(); ++c) {
        os << (c ? "  " : "");
        os << cells[c] << std::string(width[c] - cells[c].size(), ' ');
      }
      os << "\n";
    };
    os << "\n";
    line(columns);
    for (size_t c = 0; c < columns.size(); ++c)
      os << (c ? "  " : "") << std::string(width[c], '-');
    os << "\n";
    for (const auto& row : rows) line(row);
  }
  if (!aggregates.empty()) {
    os << "\n";
    for (const auto& f : aggregates) os << f.key << " = " << f.value << "\n";
  }
  for (const auto& f : meta) os << "# " << f.key << " = " << f.value << "\n";
  return os.str();
}

std::string Report::to_tsv() const {
  std::ostringstream os;
  os << "# experiment\t" << id << "\n";
  for (const auto& f : params) os << "# " << f.key << "\t" << f.value << "\n";
  if (!columns.empty()) {
    for (size_t c = 0; c < columns.size(); ++c) os << (c ? "\t" : "") << columns[c];
    os << "\n";
    for (const auto& row : rows) {
      for (size_t c = 0; c < row.size(); ++c) os << (c ? "\t" : "") << row[c];
      os << "\n";
    }
  }
  for (const auto& f : aggregates) os << "# " << f.key << "\t" << f.value << "\n";
  for (const auto& f : meta) os << "# " << f.key << "\t" << f.value << "\n";
  return os.str();
}

std::string Report::to_json() const {
  nlohmann::ordered_json doc;
  doc["experiment"] = id;
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  for (const auto& f : params) p[f.key] = f.value;
  doc["params"] = p;
  doc["columns"] = columns;
  nlohmann::ordered_json r = nlohmann::ordered_json::array();
  for (const auto& row : rows) r.push_back(row);
  doc["rows"] = r;
  nlohmann::ordered_json a = nlohmann::ordered_json::object();
  for (const auto& f : aggregates) a[f.key] = f.value;
  doc["aggregates"] = a;
  nlohmann::ordered_json m = nlohmann::ordered_json::object();
  for (const auto& f : meta) m[f.key] = f.value;
  doc["meta"] = m;
  return doc.dump(2) + "\n";
}

std::string Report::render(const std::string& format) const {
  if (format == "human") return to_human();
  if (format == "tsv") return to_tsv();
  if (format == "json") return to_json();
  throw std::invalid_argument("unknown report format: " + format);
}

}  // namespace evilnum::experiments
