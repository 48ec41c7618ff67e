#pragma once

#include <map>
#include <string>
#include <vector>

#include "evilnum/bivariate.hpp"
#include "evilnum/rational_function.hpp"

namespace evilnum::gf {

// h_b(x): ordinary generating function of the hitting probabilities a_b(n),
// built from the closed form
//   1 + x(1-x^{b-1})/((b-1)(1-x))
//     + (-1+x^{b-1})^2 x^2 / ((-bx + x^b + b - 1)(b-1)(1-x)),
// returned fully reduced.
RationalFunction build_h(long b);

// H_b(x,t): bivariate version; coefficient of x^n t^k is the probability that
// the k-th partial sum of a random digit string equals n for the first time.
//   H = 1 + x(1-x^{b-1})/((b-1)(1-x)) t
//       + (1-x^{b-1})^2 x^2 t^2 / ((t x^b - b x + b - t)(b-1)(1-x))
BivariateRationalFunction build_H(long b);

// a_b(n) = [x^n] h_b(x), exact.
BigRational hit_probability(long b, long n);
// a_b(0..n) in one pass.
std::vector<BigRational> hit_probability_series(long b, long n);

// Independent oracle: u(0)=1, u(m) = (1/(b-1)) * sum_{i=1}^{b-1} u(m-i).
// Equals a_b(n) exactly (zero digits never change a partial sum, so hitting is
// governed by the nonzero steps, uniform on {1..b-1}).
BigRational hit_probability_recurrence(long b, long n);

struct FirstHitDistribution {
  std::vector<BigRational> A;  // A_b(n,k), k = 0..kmax
  BigRational truncated_mass;  // sum of the entries
  BigRational tail_bound;      // exact rational bound on the mass beyond kmax
};
// A_b(n,k) for k = 0..kmax, by expanding the denominator of H_b geometrically
// in t (digit-count convolutions with all coefficient arrays truncated at x^n).
// The reported tail bound is a Hoeffding bound on P(first hit > kmax),
// evaluated in exact rational arithmetic.
FirstHitDistribution first_hit_distribution(long b, long n, long kmax);

// M_i(x) = ((t d/dt)^i H_b)(x, t=1). The reduced denominator factors as
// (1-x)^{i+1} Q(x) with Q(1) != 0; this is asserted and a violation throws.
RationalFunction raw_moment_series(long b, unsigned i);
// M_0..M_imax in one sweep (each step reuses the previous derivative).
std::vector<RationalFunction> raw_moment_series_upto(long b, unsigned imax);

struct MomentReport {
  long b = 10;
  long n = 666;
  unsigned imax = 2;
  std::vector<BigRational> raw;          // E[K^i | hit], i = 0..imax
  std::vector<BigRational> central;      // E[(K-mu)^i | hit]
  std::vector<std::string> scaled;       // central_i / central_2^{i/2}, exact decimals
  unsigned scaled_decimals = 50;
};
// Exact conditional moments of the evil location at (b, n); requires a_b(n) > 0
// and imax >= 2. Scaled moments are rendered as truncated decimals of
// scaled_decimals digits via exact integer square roots (odd i) or exact
// division (even i); no floating point.
MomentReport conditional_moments(long b, long n, unsigned imax, unsigned scaled_decimals = 50);

struct AsymptoticPolynomial {
  long b = 10;
  unsigned i = 1;
  bool centered = false;
  Polynomial poly;  // polynomial in n
  BigRational eval(long n) const { return poly.eval(BigRational(n)); }
};
// Polynomial-in-n part of the i-th conditional moment: the Laurent principal
// part of M_i at x=1 contributes c_j * binomial(n+j-1, j-1) per pole order j,
// scaled by b/2 (the limit of 1/a_b(n)); centered variants combine the raw
// polynomials with exact binomial algebra. The neglected remainder is
// exponentially small in n.
AsymptoticPolynomial asymptotic_moment(long b, unsigned i, bool centered);
// All of i = 0..imax from a single derivative sweep.
std::vector<AsymptoticPolynomial> asymptotic_moments_upto(long b, unsigned imax, bool centered);

struct BruteForceResult {
  BigRational hit_mass;                   // mass decided evil within L digits
  std::vector<BigRational> A;             // first-hit histogram, k = 0..L
  std::map<long, BigRational> undecided;  // partial sum s -> mass still < n after L digits
  BigRational undecided_mass;             // sum of the undecided map
};
// Exhaustive enumeration over all length-L digit strings (first digit
// nonzero), with early cutoff once a branch is decided. Guard: b^L <= 10^7.
BruteForceResult brute_force_hit(long b, long n, unsigned L);

}  // namespace evilnum::gf
