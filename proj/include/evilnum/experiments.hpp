#pragma once

#include <string>
#include <vector>

#include "evilnum/scan.hpp"

namespace evilnum::experiments {

// First `count` primes by a growing sieve of Eratosthenes.
std::vector<long> first_primes(long count);

struct Field {
  std::string key;
  std::string value;
};

// A rendered experiment: parameter echo, result rows, exact aggregates.
// Rendering truncates decimals (never rounds) unless a field says otherwise;
// rows and aggregates are deterministic for a fixed config, meta is not
// (it carries timings).
struct Report {
  std::string id;
  std::vector<Field> params;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<Field> aggregates;
  std::vector<Field> meta;

  std::string to_human() const;
  std::string to_tsv() const;
  std::string to_json() const;
  // format in {human, tsv, json}
  std::string render(const std::string& format) const;
};

struct RunOptions {
  long base = 10;
  long target = 666;
  scans::ScanMode mode = scans::ScanMode::generalized;
  long count = 100000;  // primes-pi: how many primes
  long xmax = 10000;    // pi-sqrt: scan pi*sqrt(x) for x = 1..xmax
  long trials = 1000000;
  unsigned long long seed = 20250607;
  unsigned workers = 0;  // 0 = hardware concurrency
  long precision_mult = 1;
};

// p * pi for the first `count` primes p.
Report run_primes_pi(const RunOptions& opt);
// pi * sqrt(x) for x = 1..xmax.
Report run_pi_sqrt(const RunOptions& opt);
// The golden ratio under both definitions.
Report run_golden(const RunOptions& opt);
// Monte Carlo sample statistics against the exact law.
Report run_normality_mc(const RunOptions& opt);

// Dispatch by id in {primes-pi, pi-sqrt, golden, normality-mc}.
Report run_experiment(const std::string& id, const RunOptions& opt);
std::vector<std::string> experiment_ids();

}  // namespace evilnum::experiments
