#include <doctest.h>

#include "evilnum/gf.hpp"

using namespace evilnum;
using namespace evilnum::gf;

namespace {

// published closed forms for the polynomial part of the conditional moments
Polynomial expected_poly(long b, unsigned i) {
  BigRational B(b);
  BigRational bm1 = B - BigRational(1);
  BigRational bp1 = B + BigRational(1);
  switch (i) {
    case 1:  // raw mean: 2/(b-1) n + (b-5)/(3(b-1))
      return Polynomial({(B - BigRational(5)) / (BigRational(3) * bm1), BigRational(2) / bm1});
    case 2:  // variance: 2(b+1)/(3(b-1)^2) n + (2b^2-14b+2)/(9(b-1)^2)
      return Polynomial({(BigRational(2) * B * B - BigRational(14) * B + BigRational(2)) /
                             (BigRational(9) * bm1.pow(2)),
                         BigRational(2) * bp1 / (BigRational(3) * bm1.pow(2))});
    case 3:  // 2(b+1)^2/(3(b-1)^3) n + 2(b+1)(11b^2-95b+11)/(135(b-1)^3)
      return Polynomial(
          {BigRational(2) * bp1 *
               (BigRational(11) * B * B - BigRational(95) * B + BigRational(11)) /
               (BigRational(135) * bm1.pow(3)),
           BigRational(2) * bp1.pow(2) / (BigRational(3) * bm1.pow(3))});
    case 4:  // 4(b+1)^2/(3(b-1)^4) n^2 + 2(b+1)(13b^2-30b+13)/(15(b-1)^4) n
             //   + 2(17b^2-11b+17)(b^2-10b+1)/(135(b-1)^4)
      return Polynomial(
          {BigRational(2) * (BigRational(17) * B * B - BigRational(11) * B + BigRational(17)) *
               (B * B - BigRational(10) * B + BigRational(1)) /
               (BigRational(135) * bm1.pow(4)),
           BigRational(2) * bp1 *
               (BigRational(13) * B * B - BigRational(30) * B + BigRational(13)) /
               (BigRational(15) * bm1.pow(4)),
           BigRational(4) * bp1.pow(2) / (BigRational(3) * bm1.pow(4))});
    case 5:  // 40(b+1)^3/(9(b-1)^5) n^2 + 10(31b^2-118b+31)(b+1)^2/(81(b-1)^5) n
             //   + 2(b+1)(293b^4-4291b^3+7356b^2-4291b+293)/(1701(b-1)^5)
      return Polynomial(
          {BigRational(2) * bp1 *
               (BigRational(293) * B.pow(4) - BigRational(4291) * B.pow(3) +
                BigRational(7356) * B * B - BigRational(4291) * B + BigRational(293)) /
               (BigRational(1701) * bm1.pow(5)),
           BigRational(10) *
               (BigRational(31) * B * B - BigRational(118) * B + BigRational(31)) * bp1.pow(2) /
               (BigRational(81) * bm1.pow(5)),
           BigRational(40) * bp1.pow(3) / (BigRational(9) * bm1.pow(5))});
    default:
      throw std::logic_error("expected_poly: no closed form on file");
  }
}

BigRational double_factorial(long k) {  // (k)!! for odd k, i.e. 1*3*5*...*k
  BigRational r(1);
  for (long j = k; j >= 1; j -= 2) r *= BigRational(j);
  return r;
}

}  // namespace

TEST_CASE("moment zero is the plain generating function") {
  for (long b : {3L, 10L}) CHECK(raw_moment_series(b, 0) == build_h(b));
}

TEST_CASE("reduced moment denominators have pole order i+1 at x=1") {
  for (long b : {3L, 10L}) {
    auto M = raw_moment_series_upto(b, 5);
    for (unsigned i = 0; i <= 5; ++i) {
      CHECK(M[i].pole_order_at(BigRational(1)) == static_cast<long>(i) + 1);
      // denominator degree stays linear in i: the structured operator's
      // D^m blowup must cancel out of the reduced form
      CHECK(M[i].den().degree() <= static_cast<long>(b) * static_cast<long>(i + 1));
    }
  }
}

TEST_CASE("moment series match the first-hit distribution directly") {
  // E[K^i 1{hit at n}] = sum_k k^i A(n,k), summed far enough out that the
  // certified tail bound covers the difference
  const long b = 10, n = 20;
  auto d = first_hit_distribution(b, n, 400);
  auto M = raw_moment_series_upto(b, 3);
  for (unsigned i = 0; i <= 3; ++i) {
    BigRational direct(0);
    for (size_t k = 0; k < d.A.size(); ++k) {
      BigRational kpow(1);
      for (unsigned j = 0; j < i; ++j) kpow *= BigRational(static_cast<long>(k));
      direct += kpow * d.A[k];
    }
    BigRational via_gf = M[i].series(static_cast<size_t>(n) + 1).back();
    // the truncation error is at most tail * (kmax+large)^i; at these sizes
    // the bound is astronomically small, so require agreement to 1e-40
    BigRational diff = via_gf - direct;
    if (diff.sign() < 0) diff = -diff;
    CHECK(diff < BigRational(BigInt(1), BigInt(10).pow(40)));
  }
}

TEST_CASE("asymptotic polynomials reproduce the published closed forms") {
  for (long b : {3L, 5L, 10L, 16L}) {
    CHECK(asymptotic_moment(b, 1, false).poly == expected_poly(b, 1));
    for (unsigned i = 2; i <= 5; ++i)
      CHECK(asymptotic_moment(b, i, true).poly == expected_poly(b, i));
  }
}

TEST_CASE("centered first asymptotic moment vanishes") {
  CHECK(asymptotic_moment(10, 1, true).poly.is_zero());
}

TEST_CASE("exact conditional moments at the flagship point") {
  auto rep = conditional_moments(10, 666, 6, 50);

  // variance agrees with its asymptotic value to far better than 1e-30
  BigRational asym_var = expected_poly(10, 2).eval(BigRational(666));
  BigRational dv = rep.central[2] - asym_var;
  if (dv.sign() < 0) dv = -dv;
  CHECK(dv < BigRational(BigInt(1), BigInt(10).pow(30)));

  // the mean sits a hair above its asymptote (the remainder is positive here)
  BigRational asym_mean = expected_poly(10, 1).eval(BigRational(666));
  BigRational dm = rep.raw[1] - asym_mean;
  CHECK(dm.sign() > 0);
  CHECK(dm < BigRational(BigInt(1), BigInt(10).pow(60)));

  // Gaussian shape: scaled sixth central moment within 1 of 15
  BigRational scaled6 = rep.central[6] / rep.central[2].pow(3);
  BigRational d6 = scaled6 - BigRational(15);
  if (d6.sign() < 0) d6 = -d6;
  CHECK(d6 < BigRational(1));

  // skewness is small but nonzero: 0 < skew^2 < (1/4)^2
  BigRational skew_sq = rep.central[3] * rep.central[3] / rep.central[2].pow(3);
  CHECK(skew_sq.sign() > 0);
  CHECK(skew_sq < BigRational(1, 16));

  // rendered decimals agree with the exact rationals they describe
  CHECK(rep.scaled[2] == "1.00000000000000000000000000000000000000000000000000");
  CHECK(rep.scaled[4].substr(0, 2) == "3.");
}

TEST_CASE("asymptotic remainder shrinks with n") {
  // |exact mean - asymptotic mean| at n=716 is far below its value at n=666
  auto M = raw_moment_series_upto(10, 1);
  auto a = M[0].series(717);
  auto m1 = M[1].series(717);
  Polynomial asym = expected_poly(10, 1);
  auto rem = [&](long n) {
    BigRational r = m1[static_cast<size_t>(n)] / a[static_cast<size_t>(n)] -
                    asym.eval(BigRational(n));
    return r.sign() < 0 ? -r : r;
  };
  BigRational r666 = rem(666), r716 = rem(716);
  CHECK(r716 < r666);
  CHECK(r716 * BigRational(1000) < r666);  // decays much faster than linearly
}

TEST_CASE("limit normality identities hold through the sixteenth moment") {
  // Even centered asymptotic polynomials have degree i/2 with leading
  // coefficient (i-1)!! * (2(b+1)/(3(b-1)^2))^{i/2}; odd ones have lower
  // degree. This is asymptotic normality, checked exactly.
  const long b = 10;
  const BigRational lead2 = BigRational(2 * (b + 1)) / BigRational(3 * (b - 1) * (b - 1));
  auto all = asymptotic_moments_upto(b, 16, true);
  for (unsigned i = 2; i <= 16; ++i) {
    const auto& ap = all[i];
    if (i % 2 == 0) {
      CHECK(ap.poly.degree() == static_cast<long>(i / 2));
      CHECK(ap.poly.leading() ==
            double_factorial(static_cast<long>(i) - 1) * lead2.pow(static_cast<long>(i / 2)));
    } else {
      CHECK(ap.poly.degree() < static_cast<long>(i) / 2 + 1);
      CHECK(ap.poly.degree() >= 0);
    }
  }
}
