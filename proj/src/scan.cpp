#include "evilnum/scan.hpp"

#include <atomic>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <thread>

namespace evilnum::scans {

using streams::ConstantDescriptor;
using streams::DigitStream;

ScanMode parse_scan_mode(const std::string& s) {
  if (s == "generalized") return ScanMode::generalized;
  if (s == "fractional" || s == "fractional-only" || s == "fractional_only")
    return ScanMode::fractional_only;
  throw std::invalid_argument("unknown scan mode: " + s);
}

std::string to_string(ScanMode mode) {
  return mode == ScanMode::generalized ? "generalized" : "fractional-only";
}

ScanResult scan(DigitStream& stream, long n, ScanMode mode) {
  if (n < 0) throw std::invalid_argument("scan: target must be >= 0");
  ScanResult r;
  if (n == 0) {  // the empty partial sum is already 0
    r.evil = true;
    return r;
  }
  const long skip =
      mode == ScanMode::fractional_only ? std::max(stream.integer_digit_count(), 0L) : 0;
  long sum = 0;
  long idx = 0;
  long last_nonzero = 0;
  while (true) {
    if (stream.tail_is_zero()) {  // sum can never grow again
      r.digits_consumed = last_nonzero;
      r.final_sum = sum;
      return r;
    }
    int d = stream.next();
    ++idx;
    if (d != 0) last_nonzero = idx;
    if (idx <= skip) continue;  // integer digits excluded in fractional mode
    sum += d;
    if (sum >= n) {
      r.evil = sum == n;
      r.location = r.evil ? idx - skip : 0;
      r.digits_consumed = idx;
      r.final_sum = sum;
      return r;
    }
  }
}

long planned_fraction_digits(long b, long n, long precision_mult) {
  if (precision_mult < 1) precision_mult = 1;
  long expect = (2 * n + b - 2) / (b - 1);  // ceil(2n/(b-1))
  return (expect + 96) * precision_mult;
}

ScanResult scan_constant(const ConstantDescriptor& c, long b, long n, ScanMode mode,
                         long precision_mult) {
  DigitStream stream(c, b, planned_fraction_digits(b, n, precision_mult));
  return scan(stream, n, mode);
}

BatchResult scan_batch(const std::vector<ConstantDescriptor>& members, long b, long n,
                       ScanMode mode, unsigned workers, long precision_mult) {
  if (members.empty()) throw std::invalid_argument("scan_batch: empty batch");
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, members.size());

  BatchResult out;
  out.results.resize(members.size());
  std::vector<std::string> errors(members.size());
  std::vector<char> cert_failure(members.size(), 0);
  std::atomic<size_t> cursor{0};

  auto work = [&]() {
    while (true) {
      size_t i = cursor.fetch_add(1);
      if (i >= members.size()) return;
      try {
        out.results[i] = scan_constant(members[i], b, n, mode, precision_mult);
      } catch (const streams::CertificationError& e) {
        errors[i] = e.what();
        cert_failure[i] = 1;
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  for (size_t i = 0; i < members.size(); ++i)
    if (!errors[i].empty()) {
      std::string msg = "scan_batch: member " + std::to_string(i) + " (" +
                        streams::to_string(members[i]) + ") failed: " + errors[i];
      if (cert_failure[i]) throw streams::CertificationError(msg);
      throw std::runtime_error(msg);
    }

  auto& agg = out.aggregates;
  agg.total = static_cast<long>(members.size());
  BigInt loc_sum(0);
  for (const auto& r : out.results)
    if (r.evil) {
      ++agg.evil_count;
      loc_sum += BigInt(r.location);
    }
  agg.evil_fraction = BigRational(agg.evil_count, agg.total);
  if (agg.evil_count > 0) agg.mean_location = BigRational(loc_sum, BigInt(agg.evil_count));
  return out;
}

namespace {

// unbiased uniform draw from {0, ..., m-1} via rejection; deterministic for a
// given engine state, unlike std::uniform_int_distribution
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t m) {
  const std::uint64_t limit = (UINT64_MAX / m) * m;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % m;
}

}  // namespace

MonteCarloResult monte_carlo_scan(long b, long n, long trials, unsigned long long seed) {
  if (b < 2) throw std::invalid_argument("monte_carlo_scan: base must be >= 2");
  if (n < 1) throw std::invalid_argument("monte_carlo_scan: target must be >= 1");
  if (trials < 1) throw std::invalid_argument("monte_carlo_scan: trials must be >= 1");

  MonteCarloResult out;
  out.trials = trials;
  std::mt19937_64 rng(seed);
  const auto base = static_cast<std::uint64_t>(b);
  BigInt loc_sum(0);
  for (long t = 0; t < trials; ++t) {
    long sum = static_cast<long>(uniform_below(rng, base - 1)) + 1;  // first digit nonzero
    long k = 1;
    while (sum < n) {
      sum += static_cast<long>(uniform_below(rng, base));
      ++k;
    }
    if (sum == n) {
      ++out.evil_count;
      if (static_cast<size_t>(k) >= out.histogram.size()) out.histogram.resize(k + 1, 0);
      ++out.histogram[k];
      loc_sum += BigInt(k);
    }
  }
  out.evil_fraction = BigRational(out.evil_count, out.trials);
  if (out.evil_count > 0) out.mean_location = BigRational(loc_sum, BigInt(out.evil_count));
  return out;
}

}  // namespace evilnum::scans
