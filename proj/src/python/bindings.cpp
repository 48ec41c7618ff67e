#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "evilnum/experiments.hpp"
#include "evilnum/gf.hpp"
#include "evilnum/scan.hpp"

namespace py = pybind11;
using namespace evilnum;

namespace {

// BigRational -> fractions.Fraction through decimal strings of the integer
// parts, so arbitrary-size values cross the boundary exactly
py::object to_fraction(const BigRational& r) {
  py::object Fraction = py::module_::import("fractions").attr("Fraction");
  py::object big = py::module_::import("builtins").attr("int");
  return Fraction(big(r.num().to_string()), big(r.den().to_string()));
}

py::list to_fractions(const std::vector<BigRational>& v) {
  py::list out;
  for (const auto& r : v) out.append(to_fraction(r));
  return out;
}

scans::ScanMode mode_from(const std::string& name) { return scans::parse_scan_mode(name); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact arithmetic of digit partial-sum hitting times";

  m.def(
      "hit_probability",
      [](long b, long n) { return to_fraction(gf::hit_probability(b, n)); },
      py::arg("base"), py::arg("target"),
      "Exact probability that a random digit string is target-evil.");

  m.def(
      "first_hit_distribution",
      [](long b, long n, long kmax) {
        auto fh = gf::first_hit_distribution(b, n, kmax);
        py::dict out;
        out["A"] = to_fractions(fh.A);
        out["truncated_mass"] = to_fraction(fh.truncated_mass);
        out["tail_bound"] = to_fraction(fh.tail_bound);
        return out;
      },
      py::arg("base"), py::arg("target"), py::arg("kmax"),
      "Exact law of the first-hit location, k = 0..kmax, with a tail bound.");

  m.def(
      "conditional_moments",
      [](long b, long n, unsigned imax, unsigned digits) {
        auto r = gf::conditional_moments(b, n, imax, digits);
        py::dict out;
        out["raw"] = to_fractions(r.raw);
        out["central"] = to_fractions(r.central);
        out["scaled"] = r.scaled;
        return out;
      },
      py::arg("base"), py::arg("target"), py::arg("imax"), py::arg("digits") = 50,
      "Exact conditional moments of the evil location; scaled moments as "
      "truncated decimal strings.");

  m.def(
      "asymptotic_moment",
      [](long b, unsigned i, bool centered) {
        auto a = gf::asymptotic_moment(b, i, centered);
        std::vector<BigRational> coeffs;
        for (size_t j = 0; j <= a.poly.degree(); ++j) coeffs.push_back(a.poly.coeff(j));
        return to_fractions(coeffs);
      },
      py::arg("base"), py::arg("i"), py::arg("centered"),
      "Coefficients (ascending powers of n) of the polynomial part of the "
      "i-th conditional moment.");

  m.def(
      "digits",
      [](const std::string& spec, long b, long count) {
        return streams::digits(streams::parse_constant(spec), b, count);
      },
      py::arg("constant"), py::arg("base"), py::arg("count"),
      "First `count` certified digits of the constant, integer part first.");

  py::class_<scans::ScanResult>(m, "ScanResult")
      .def_readonly("evil", &scans::ScanResult::evil)
      .def_readonly("location", &scans::ScanResult::location)
      .def_readonly("digits_consumed", &scans::ScanResult::digits_consumed)
      .def_readonly("final_sum", &scans::ScanResult::final_sum)
      .def("__repr__", [](const scans::ScanResult& r) {
        return "ScanResult(evil=" + std::string(r.evil ? "True" : "False") +
               ", location=" + std::to_string(r.location) +
               ", digits_consumed=" + std::to_string(r.digits_consumed) +
               ", final_sum=" + std::to_string(r.final_sum) + ")";
      });

  m.def(
      "scan",
      [](const std::string& spec, long b, long n, const std::string& mode, long precision_mult) {
        return scans::scan_constant(streams::parse_constant(spec), b, n, mode_from(mode),
                                    precision_mult);
      },
      py::arg("constant"), py::arg("base") = 10, py::arg("target") = 666,
      py::arg("mode") = "generalized", py::arg("precision_mult") = 1,
      "Scan one constant for evilness.");

  m.def(
      "scan_batch",
      [](const std::vector<std::string>& specs, long b, long n, const std::string& mode,
         unsigned workers, long precision_mult) {
        std::vector<streams::ConstantDescriptor> members;
        members.reserve(specs.size());
        for (const auto& s : specs) members.push_back(streams::parse_constant(s));
        auto out = scans::scan_batch(members, b, n, mode_from(mode), workers, precision_mult);
        py::dict agg;
        agg["total"] = out.aggregates.total;
        agg["evil_count"] = out.aggregates.evil_count;
        agg["evil_fraction"] = to_fraction(out.aggregates.evil_fraction);
        agg["mean_location"] = to_fraction(out.aggregates.mean_location);
        return py::make_tuple(out.results, agg);
      },
      py::arg("constants"), py::arg("base") = 10, py::arg("target") = 666,
      py::arg("mode") = "generalized", py::arg("workers") = 0, py::arg("precision_mult") = 1,
      "Scan many constants concurrently; returns (results, aggregates).");

  m.def(
      "monte_carlo_scan",
      [](long b, long n, long trials, unsigned long long seed) {
        auto r = scans::monte_carlo_scan(b, n, trials, seed);
        py::dict out;
        out["trials"] = r.trials;
        out["evil_count"] = r.evil_count;
        out["histogram"] = r.histogram;
        out["evil_fraction"] = to_fraction(r.evil_fraction);
        out["mean_location"] = to_fraction(r.mean_location);
        return out;
      },
      py::arg("base"), py::arg("target"), py::arg("trials"), py::arg("seed"),
      "Simulate random digit strings; deterministic for a fixed seed.");

  m.def("first_primes", &experiments::first_primes, py::arg("count"),
        "The first `count` primes.");

  m.def(
      "run_experiment",
      [](const std::string& id, long base, long target, const std::string& mode, long count,
         long xmax, long trials, unsigned long long seed, unsigned workers, long precision_mult,
         const std::string& format) {
        experiments::RunOptions opt;
        opt.base = base;
        opt.target = target;
        opt.mode = mode_from(mode);
        opt.count = count;
        opt.xmax = xmax;
        opt.trials = trials;
        opt.seed = seed;
        opt.workers = workers;
        opt.precision_mult = precision_mult;
        return experiments::run_experiment(id, opt).render(format);
      },
      py::arg("id"), py::arg("base") = 10, py::arg("target") = 666,
      py::arg("mode") = "generalized", py::arg("count") = 100000, py::arg("xmax") = 10000,
      py::arg("trials") = 1000000, py::arg("seed") = 20250607, py::arg("workers") = 0,
      py::arg("precision_mult") = 1, py::arg("format") = "json",
      "Run a named experiment and return the rendered report.");
}
