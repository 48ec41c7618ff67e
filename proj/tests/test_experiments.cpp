#include <doctest.h>

#include <json.hpp>

#include <cstdlib>

#include "evilnum/experiments.hpp"

using namespace evilnum;
using namespace evilnum::experiments;

TEST_CASE("prime sieve") {
  CHECK(first_primes(5) == std::vector<long>({2, 3, 5, 7, 11}));
  CHECK(first_primes(0).empty());
  CHECK(first_primes(1) == std::vector<long>({1 + 1}));
  auto p = first_primes(100000);
  CHECK(p.size() == 100000);
  CHECK(p.back() == 1299709);
  // pi(1299709) == 100000: the next prime is strictly larger
  CHECK(first_primes(100001).back() > 1299709);
  CHECK(p[9999] == 104729);  // the 10000th prime, classic table value
}

TEST_CASE("golden experiment reproduces both definitions") {
  RunOptions opt;
  auto rep = run_golden(opt);
  REQUIRE(rep.rows.size() == 3);
  CHECK(rep.rows[0] == std::vector<std::string>({"golden-1", "generalized", "evil", "146", "146"}));
  CHECK(rep.rows[1][2] == "not_evil");
  CHECK(rep.rows[2] ==
        std::vector<std::string>({"golden", "fractional-only", "evil", "146", "147"}));
}

TEST_CASE("primes-pi smoke run is internally consistent") {
  RunOptions opt;
  opt.count = 100;
  auto rep = run_primes_pi(opt);
  REQUIRE(rep.rows.size() == 100);
  CHECK(rep.rows[0][0] == "2");
  CHECK(rep.rows[99][0] == "541");  // the 100th prime
  long evil = 0;
  for (const auto& row : rep.rows) {
    REQUIRE(row.size() == 3);
    CHECK((row[1] == "evil" || row[1] == "not_evil"));
    if (row[1] == "evil") {
      ++evil;
      CHECK(std::atol(row[2].c_str()) > 0);
    } else {
      CHECK(row[2] == "-");
    }
  }
  // aggregates are exact functions of the rows
  for (const auto& f : rep.aggregates) {
    if (f.key == "evil_count") CHECK(f.value == std::to_string(evil));
    if (f.key == "total") CHECK(f.value == "100");
    if (f.key == "evil_fraction") CHECK(f.value == std::to_string(evil) + "/100");
  }
}

TEST_CASE("pi-sqrt smoke run") {
  RunOptions opt;
  opt.xmax = 25;
  auto rep = run_pi_sqrt(opt);
  REQUIRE(rep.rows.size() == 25);
  CHECK(rep.rows[0][0] == "1");
  // x=1 is plain pi: not evil in generalized mode (sum runs 669 at digit 145)
  CHECK(rep.rows[0][1] == "not_evil");
  CHECK(rep.rows[24][0] == "25");
}

TEST_CASE("normality-mc report") {
  RunOptions opt;
  opt.trials = 50000;
  opt.seed = 12345;
  auto rep = run_normality_mc(opt);
  REQUIRE(rep.rows.size() == 5);
  CHECK(rep.rows[0][0] == "evil_fraction");
  CHECK(rep.rows[1][0] == "mean_location");
  CHECK(rep.rows[4][0] == "kurtosis");
  // exact column: the known values at (10, 666)
  CHECK(rep.rows[0][1].substr(0, 6) == "0.1999");
  CHECK(rep.rows[1][1].substr(0, 8) == "148.1851");
  // MC columns land near them
  double frac = std::atof(rep.rows[0][2].c_str());
  CHECK(frac > 0.19);
  CHECK(frac < 0.21);
  double mean = std::atof(rep.rows[1][2].c_str());
  CHECK(mean > 147.0);
  CHECK(mean < 149.5);
  double kurt = std::atof(rep.rows[4][2].c_str());
  CHECK(kurt > 2.5);
  CHECK(kurt < 3.5);
  // deterministic rows under the same config
  auto rep2 = run_normality_mc(opt);
  CHECK(rep.rows == rep2.rows);
  CHECK(rep.aggregates.size() == rep2.aggregates.size());
}

TEST_CASE("report renderings") {
  RunOptions opt;
  opt.count = 4;
  auto rep = run_primes_pi(opt);
  REQUIRE(rep.rows.size() == 4);

  std::string tsv = rep.to_tsv();
  CHECK(tsv.find("prime\tverdict\tlocation\n") != std::string::npos);
  CHECK(tsv.find("# experiment\tprimes-pi\n") != std::string::npos);
  CHECK(tsv.find("# evil_fraction\t") != std::string::npos);

  std::string human = rep.to_human();
  CHECK(human.find("experiment: primes-pi") != std::string::npos);
  CHECK(human.find("prime") != std::string::npos);

  auto doc = nlohmann::json::parse(rep.to_json());
  CHECK(doc["experiment"] == "primes-pi");
  CHECK(doc["rows"].size() == 4);
  CHECK(doc["columns"].size() == 3);
  CHECK(doc["params"]["count"] == "4");
  CHECK(doc["aggregates"].contains("evil_fraction"));

  CHECK(rep.render("tsv") == tsv);
  CHECK_THROWS_AS(rep.render("xml"), std::invalid_argument);
}

TEST_CASE("experiment dispatch") {
  CHECK(experiment_ids().size() == 4);
  RunOptions opt;
  opt.count = 2;
  CHECK(run_experiment("primes-pi", opt).id == "primes-pi");
  CHECK_THROWS_AS(run_experiment("nonsense", opt), std::invalid_argument);
}
