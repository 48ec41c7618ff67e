#pragma once

#include <vector>

#include "evilnum/digit_stream.hpp"
#include "evilnum/rational.hpp"

namespace evilnum::scans {

// Which digits participate in the partial sums.
enum class ScanMode {
  generalized,      // every emitted digit, integer part included
  fractional_only,  // digits after the radix point only
};

ScanMode parse_scan_mode(const std::string& s);
std::string to_string(ScanMode mode);

struct ScanResult {
  bool evil = false;
  // 1-based index of the digit whose partial sum hit the target exactly.
  // Generalized mode counts from the first emitted digit, fractional mode from
  // the first digit after the point.  0 when not evil, and for the target n=0
  // (empty-sum convention).
  long location = 0;
  long digits_consumed = 0;  // raw digits drawn from the stream
  long final_sum = 0;        // running sum at the moment of decision
};

// Scan an existing stream.  The running sum is nondecreasing, so the verdict
// falls at the first digit where it reaches the target: evil iff it equals the
// target there.  Terminating streams whose total sum stays below the target
// are not evil; digits_consumed then points at the last nonzero digit.
ScanResult scan(streams::DigitStream& stream, long n, ScanMode mode);

// Build a stream for the descriptor with a sensible precision plan and scan
// it.  precision_mult scales the initial certified-digit budget (used to
// demonstrate that verdicts do not depend on the precision schedule).
ScanResult scan_constant(const streams::ConstantDescriptor& c, long b, long n,
                         ScanMode mode, long precision_mult = 1);

// Initial fraction-digit budget for a target-n scan: expected consumption
// 2n/(b-1) plus a wide safety margin; streams escalate on their own if a rare
// outlier runs past it.
long planned_fraction_digits(long b, long n, long precision_mult = 1);

struct BatchAggregates {
  long total = 0;
  long evil_count = 0;
  BigRational evil_fraction;  // evil_count / total, exact
  BigRational mean_location;  // exact mean over evil members, 0 if none
};

struct BatchResult {
  std::vector<ScanResult> results;  // input order
  BatchAggregates aggregates;
};

// Scan every member concurrently (members are independent); aggregates are
// merged in input order, so results are deterministic for any worker count.
// workers = 0 picks the hardware concurrency.  A failing member aborts the
// batch with a message identifying it.
BatchResult scan_batch(const std::vector<streams::ConstantDescriptor>& members,
                       long b, long n, ScanMode mode, unsigned workers = 0,
                       long precision_mult = 1);

struct MonteCarloResult {
  long trials = 0;
  long evil_count = 0;
  std::vector<long> histogram;  // histogram[k] = evil trials with location k
  BigRational evil_fraction;    // exact over the simulated sample
  BigRational mean_location;    // exact mean over evil trials, 0 if none
};

// Simulate digit strings (first digit uniform over 1..b-1, the rest uniform
// over 0..b-1) and scan each for the target.  Deterministic given the seed.
MonteCarloResult monte_carlo_scan(long b, long n, long trials,
                                  unsigned long long seed);

}  // namespace evilnum::scans
