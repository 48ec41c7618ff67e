#include <doctest.h>

#include <cmath>
#include <string>

#include "evilnum/decimal.hpp"
#include "evilnum/gf.hpp"
#include "evilnum/scan.hpp"

using namespace evilnum;
using namespace evilnum::gf;
using namespace evilnum::scans;
using streams::ConstantDescriptor;
using streams::DigitStream;
using streams::parse_constant;

TEST_CASE("golden ratio scans") {
  // phi-1 hits 666 at digit 146 under the generalized definition
  auto r = scan_constant(parse_constant("golden-1"), 10, 666, ScanMode::generalized);
  CHECK(r.evil);
  CHECK(r.location == 146);
  CHECK(r.digits_consumed == 146);
  CHECK(r.final_sum == 666);
  // phi itself overshoots in generalized mode (the leading 1 shifts the sums)
  auto g = scan_constant(parse_constant("golden"), 10, 666, ScanMode::generalized);
  CHECK_FALSE(g.evil);
  CHECK(g.final_sum > 666);
  // ...but its fractional digits are exactly phi-1's
  auto f = scan_constant(parse_constant("golden"), 10, 666, ScanMode::fractional_only);
  CHECK(f.evil);
  CHECK(f.location == 146);
  CHECK(f.digits_consumed == 147);  // the integer digit was consumed, not summed
}

TEST_CASE("mode relation for pure fractions") {
  for (const char* spec : {"golden-1", "rational 1/3", "rational 1/7"}) {
    for (long n : {6L, 20L, 100L}) {
      auto a = scan_constant(parse_constant(spec), 10, n, ScanMode::generalized);
      auto b = scan_constant(parse_constant(spec), 10, n, ScanMode::fractional_only);
      CHECK(a.evil == b.evil);
      CHECK(a.location == b.location);
    }
  }
}

TEST_CASE("definition relation between phi and phi-1") {
  for (long n : {10L, 50L, 237L, 666L}) {
    auto a = scan_constant(parse_constant("golden-1"), 10, n, ScanMode::generalized);
    auto b = scan_constant(parse_constant("golden"), 10, n, ScanMode::fractional_only);
    CHECK(a.evil == b.evil);
    CHECK(a.location == b.location);
  }
}

TEST_CASE("terminating expansions") {
  auto one = parse_constant("rational 1/1");
  CHECK(scan_constant(one, 10, 1, ScanMode::generalized).evil);
  CHECK(scan_constant(one, 10, 1, ScanMode::generalized).location == 1);
  auto miss = scan_constant(one, 10, 2, ScanMode::generalized);
  CHECK_FALSE(miss.evil);
  CHECK(miss.digits_consumed == 1);
  CHECK(miss.final_sum == 1);
  // integer value in fractional mode: nothing to sum
  auto five = scan_constant(parse_constant("rational 5/1"), 10, 3, ScanMode::fractional_only);
  CHECK_FALSE(five.evil);
  CHECK(five.final_sum == 0);
  // zero constant
  auto z = scan_constant(parse_constant("rational 0/1"), 10, 1, ScanMode::generalized);
  CHECK_FALSE(z.evil);
  CHECK(z.digits_consumed == 0);
}

TEST_CASE("repeating rational by hand") {
  // 1/3 = .3333...: partial sums 3,6,9,...
  auto hit = scan_constant(parse_constant("rational 1/3"), 10, 6, ScanMode::generalized);
  CHECK(hit.evil);
  CHECK(hit.location == 2);
  auto miss = scan_constant(parse_constant("rational 1/3"), 10, 7, ScanMode::generalized);
  CHECK_FALSE(miss.evil);
  CHECK(miss.final_sum == 9);
  CHECK(miss.digits_consumed == 3);
}

TEST_CASE("target zero is always hit by the empty sum") {
  auto r = scan_constant(parse_constant("pi"), 10, 0, ScanMode::generalized);
  CHECK(r.evil);
  CHECK(r.location == 0);
  CHECK(r.digits_consumed == 0);
}

TEST_CASE("scan results are precision independent") {
  for (const char* spec : {"golden-1", "sqrt 2", "7*pi", "e"}) {
    auto a = scan_constant(parse_constant(spec), 10, 666, ScanMode::generalized, 1);
    auto b = scan_constant(parse_constant(spec), 10, 666, ScanMode::generalized, 2);
    CHECK(a.evil == b.evil);
    CHECK(a.location == b.location);
    CHECK(a.digits_consumed == b.digits_consumed);
    CHECK(a.final_sum == b.final_sum);
  }
}

TEST_CASE("batch of ones") {
  std::vector<ConstantDescriptor> members(4, parse_constant("rational 1/1"));
  auto out = scan_batch(members, 10, 1, ScanMode::generalized);
  CHECK(out.aggregates.total == 4);
  CHECK(out.aggregates.evil_count == 4);
  CHECK(out.aggregates.evil_fraction == BigRational(1));
  CHECK(out.aggregates.mean_location == BigRational(1));
  for (const auto& r : out.results) CHECK(r.location == 1);
}

TEST_CASE("batch results do not depend on worker count") {
  std::vector<ConstantDescriptor> members;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L})
    members.push_back(ConstantDescriptor::make_rational_times_pi(BigInt(p)));
  members.push_back(parse_constant("golden-1"));
  members.push_back(parse_constant("sqrt 2"));
  auto a = scan_batch(members, 10, 666, ScanMode::generalized, 1);
  auto b = scan_batch(members, 10, 666, ScanMode::generalized, 4);
  REQUIRE(a.results.size() == b.results.size());
  for (size_t i = 0; i < a.results.size(); ++i) {
    CHECK(a.results[i].evil == b.results[i].evil);
    CHECK(a.results[i].location == b.results[i].location);
  }
  CHECK(a.aggregates.evil_fraction == b.aggregates.evil_fraction);
  CHECK(a.aggregates.mean_location == b.aggregates.mean_location);
}

TEST_CASE("batch failure identifies the member") {
  std::vector<ConstantDescriptor> members{parse_constant("rational 1/3"),
                                          ConstantDescriptor::make_file("no_such_file.txt")};
  CHECK_THROWS_WITH_AS(scan_batch(members, 10, 6, ScanMode::generalized),
                       doctest::Contains("member 1"), std::runtime_error);
}

TEST_CASE("monte carlo determinism and bands") {
  auto a = monte_carlo_scan(10, 666, 200000, 20240511);
  auto b = monte_carlo_scan(10, 666, 200000, 20240511);
  CHECK(a.evil_count == b.evil_count);
  CHECK(a.histogram == b.histogram);
  CHECK(a.mean_location == b.mean_location);
  // 5 sigma binomial band around the exact hit probability ~ 0.2
  double frac = static_cast<double>(a.evil_count) / 200000.0;
  CHECK(frac > 0.2 - 5 * 0.000894);
  CHECK(frac < 0.2 + 5 * 0.000894);
  auto c = monte_carlo_scan(10, 666, 200000, 1);
  CHECK(a.evil_count != c.evil_count);  // different seed, different sample (a.s.)
}

TEST_CASE("monte carlo histogram matches the exact first-hit law") {
  const long n = 20, trials = 400000;
  auto mc = monte_carlo_scan(10, n, trials, 97);
  auto exact = first_hit_distribution(10, n, 60);
  REQUIRE(mc.histogram.size() <= 61);
  for (size_t k = 1; k < mc.histogram.size(); ++k) {
    // 5 sigma multinomial band per bucket
    double p = std::stod(decimal_truncate(exact.A[k], 40));
    double got = static_cast<double>(mc.histogram[k]) / trials;
    double sigma = std::sqrt(p * (1 - p) / trials);
    INFO("k=" << k);
    CHECK(std::abs(got - p) <= 5 * sigma + 1e-12);
  }
}

TEST_CASE("golden verdicts recorded on first verified run") {
  struct Row {
    const char* spec;
    ScanMode mode;
    bool evil;
    long location;
    long consumed;
    long sum;
  };
  // the pi row reproduces the classic curiosity: the first 144 digits of pi
  // after the point sum to exactly 666
  const Row rows[] = {
      {"sqrt 2", ScanMode::generalized, false, 0, 148, 668},
      {"sqrt 2", ScanMode::fractional_only, false, 0, 148, 667},
      {"e", ScanMode::generalized, false, 0, 140, 667},
      {"pi", ScanMode::generalized, false, 0, 145, 669},
      {"pi", ScanMode::fractional_only, true, 144, 145, 666},
      {"2*pi", ScanMode::generalized, false, 0, 140, 669},
      {"champernowne", ScanMode::generalized, false, 0, 155, 667},
      {"rational 22/7", ScanMode::generalized, true, 149, 149, 666},
  };
  for (const auto& row : rows) {
    INFO(row.spec << " " << to_string(row.mode));
    auto r = scan_constant(parse_constant(row.spec), 10, 666, row.mode);
    CHECK(r.evil == row.evil);
    CHECK(r.location == row.location);
    CHECK(r.digits_consumed == row.consumed);
    CHECK(r.final_sum == row.sum);
  }
}

TEST_CASE("scan mode strings") {
  CHECK(parse_scan_mode("generalized") == ScanMode::generalized);
  CHECK(parse_scan_mode("fractional") == ScanMode::fractional_only);
  CHECK(parse_scan_mode("fractional-only") == ScanMode::fractional_only);
  CHECK_THROWS_AS(parse_scan_mode("both"), std::invalid_argument);
  CHECK(to_string(ScanMode::generalized) == "generalized");
  CHECK(to_string(ScanMode::fractional_only) == "fractional-only");
}
