#include "evilnum/gf.hpp"

#include <algorithm>
#include <stdexcept>

#include "evilnum/decimal.hpp"
#include "evilnum/isqrt.hpp"

namespace evilnum::gf {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// 1 - x^e
Polynomial one_minus_pow(long e) {
  std::vector<BigRational> v(static_cast<size_t>(e) + 1);
  v[0] = BigRational(1);
  v[static_cast<size_t>(e)] = BigRational(-1);
  return Polynomial(std::move(v));
}

}  // namespace

RationalFunction build_h(long b) {
  require(b >= 2, "build_h: base must be >= 2");
  const Polynomial x = Polynomial::monomial(BigRational(1), 1);
  const Polynomial omxb1 = one_minus_pow(b - 1);  // 1 - x^{b-1}
  const Polynomial E = BigRational(b - 1) * one_minus_pow(1);

  // -bx + x^b + b - 1
  std::vector<BigRational> dv(static_cast<size_t>(b) + 1);
  dv[0] = BigRational(b - 1);
  dv[1] = BigRational(-b);
  dv[static_cast<size_t>(b)] = BigRational(1);
  const Polynomial D1(std::move(dv));

  RationalFunction term1(Polynomial(BigRational(1)));
  RationalFunction term2(x * omxb1, E);
  Polynomial m1xb1 = -omxb1;  // -1 + x^{b-1}
  RationalFunction term3(m1xb1 * m1xb1 * x * x, D1 * E);
  return term1 + term2 + term3;
}

BivariateRationalFunction build_H(long b) {
  require(b >= 2, "build_H: base must be >= 2");
  const Polynomial x = Polynomial::monomial(BigRational(1), 1);
  const Polynomial omxb1 = one_minus_pow(b - 1);
  const Polynomial E = BigRational(b - 1) * one_minus_pow(1);

  // D(x,t) = t x^b - b x + b - t = (b - bx) + (x^b - 1) t
  Polynomial d0({BigRational(b), BigRational(-b)});
  Polynomial d1 = -one_minus_pow(b);
  BivariatePoly D(std::vector<Polynomial>{d0, d1});

  // single numerator over the common denominator D * E:
  //   E*D  +  x(1-x^{b-1}) D t  +  x^2 (1-x^{b-1})^2 t^2
  Polynomial f = x * omxb1;
  BivariatePoly num = BivariatePoly(E) * D + (BivariatePoly(f) * D).mul_t() +
                      BivariatePoly(std::vector<Polynomial>{Polynomial(), Polynomial(), f * f});
  return BivariateRationalFunction(std::move(num), std::move(D), 1, E);
}

std::vector<BigRational> hit_probability_series(long b, long n) {
  require(b >= 2 && n >= 0, "hit_probability: need b >= 2, n >= 0");
  return build_h(b).series(static_cast<size_t>(n) + 1);
}

BigRational hit_probability(long b, long n) {
  return hit_probability_series(b, n).back();
}

BigRational hit_probability_recurrence(long b, long n) {
  require(b >= 2 && n >= 0, "hit_probability_recurrence: need b >= 2, n >= 0");
  std::vector<BigRational> u(static_cast<size_t>(n) + 1);
  u[0] = BigRational(1);
  const BigRational inv(1, b - 1);
  for (long m = 1; m <= n; ++m) {
    BigRational acc(0);
    for (long i = 1; i <= b - 1 && i <= m; ++i) acc += u[static_cast<size_t>(m - i)];
    u[static_cast<size_t>(m)] = acc * inv;
  }
  return u[static_cast<size_t>(n)];
}

FirstHitDistribution first_hit_distribution(long b, long n, long kmax) {
  require(b >= 2 && n >= 0 && kmax >= 0, "first_hit_distribution: bad parameters");
  FirstHitDistribution out;
  out.A.reserve(static_cast<size_t>(kmax) + 1);
  out.A.push_back(BigRational(n == 0 ? 1 : 0));  // the empty partial sum is 0
  if (n == 0) {
    for (long k = 1; k <= kmax; ++k) out.A.push_back(BigRational(0));
    out.truncated_mass = BigRational(1);
    out.tail_bound = BigRational(0);
    return out;
  }
  // S_k[j] counts digit strings d_1..d_k (d_1 in 1..b-1, the rest 0..b-1) with
  // digit sum j <= n. Because partial sums are nondecreasing, reaching sum n
  // after k digits with d_k > 0 IS a first hit at k, so for k >= 2
  //   A(n,k) = (S_k[n] - S_{k-1}[n]) / ((b-1) b^{k-1})
  // (strings counted by S_{k-1}[n] continue with d_k = 0 and already hit).
  const size_t N = static_cast<size_t>(n);
  std::vector<BigInt> S(N + 1, BigInt(0));
  for (long d = 1; d <= b - 1 && d <= n; ++d) S[static_cast<size_t>(d)] = BigInt(1);
  if (kmax >= 1) out.A.push_back(BigRational(S[N], BigInt(b - 1)));
  BigInt denom(b - 1);
  std::vector<BigInt> prefix(N + 2, BigInt(0));
  for (long k = 2; k <= kmax; ++k) {
    denom *= BigInt(b);
    for (size_t j = 0; j <= N; ++j) prefix[j + 1] = prefix[j] + S[j];
    std::vector<BigInt> next(N + 1);
    for (size_t j = 0; j <= N; ++j) {
      size_t lo = j + 1 >= static_cast<size_t>(b) ? j + 1 - static_cast<size_t>(b) : 0;
      next[j] = prefix[j + 1] - prefix[lo];
    }
    out.A.push_back(BigRational(next[N] - S[N], denom));
    S = std::move(next);
  }
  out.truncated_mass = BigRational(0);
  for (const auto& a : out.A) out.truncated_mass += a;

  // Tail: a first hit beyond kmax forces the m = kmax-1 digits after the first
  // (uniform on {0..b-1}) to sum below n. Hoeffding for mean m(b-1)/2, range
  // b-1 per digit: P(sum < n) <= exp(-z), z = 2 t^2 / (m (b-1)^2) with
  // t = m(b-1)/2 - n, valid for t > 0; and exp(-z) <= 1 / sum_{j=0}^{12} z^j/j!.
  long m = kmax - 1;
  if (m <= 0) {
    out.tail_bound = BigRational(1);
    return out;
  }
  BigRational t = BigRational(m * (b - 1), 2) - BigRational(n);
  if (t.sign() <= 0) {
    out.tail_bound = BigRational(1);
    return out;
  }
  BigRational z = BigRational(2) * t * t / BigRational(m * (b - 1) * (b - 1));
  BigRational expsum(0);
  BigRational term(1);
  for (long j = 0; j <= 12; ++j) {
    expsum += term;
    term = term * z / BigRational(j + 1);
  }
  out.tail_bound = BigRational(1) / expsum;
  return out;
}

namespace {

// Evaluate the structured derivative at t=1 and reduce, exploiting the known
// denominator shape D(x,1)^m E(x) with D(x,1) = x^b - bx + b - 1
// = (x-1)^2 W(x), W(1) != 0: cancel the shared (x-1) valuation directly, then
// certify coprimality with one small gcd against W instead of a general gcd
// against the full degree-(mb+1) denominator.
RationalFunction reduce_moment(const BivariateRationalFunction& H, unsigned i) {
  Polynomial n1 = H.num().eval_t(BigRational(1));
  Polynomial d1 = H.D().eval_t(BigRational(1));
  auto [vw, W] = d1.valuation_at(BigRational(1));
  if (vw != 2) throw std::logic_error("raw_moment_series: D(x,1) must vanish doubly at x=1");
  Polynomial den = d1.pow(H.m()) * H.E();

  auto [vn, num_s] = n1.valuation_at(BigRational(1));
  auto [vd, dred] = den.valuation_at(BigRational(1));
  if (vn >= vd) throw std::logic_error("raw_moment_series: pole at x=1 vanished");
  Polynomial den_s = dred;
  const Polynomial xm1({BigRational(-1), BigRational(1)});
  for (long k = 0; k < vd - vn; ++k) den_s = den_s * xm1;

  // num_s has no root at 1 and den_s = c (x-1)^{vd-vn} W^m, so the pair is
  // coprime exactly when gcd(num_s, W) is trivial.
  RationalFunction M = poly_gcd(num_s, W).degree() > 0
                           ? RationalFunction(std::move(num_s), std::move(den_s))
                           : RationalFunction(std::move(num_s), std::move(den_s),
                                              RationalFunction::reduced);
  if (M.pole_order_at(BigRational(1)) != static_cast<long>(i) + 1)
    throw std::logic_error("raw_moment_series: pole order at x=1 is not i+1");
  return M;
}

}  // namespace

std::vector<RationalFunction> raw_moment_series_upto(long b, unsigned imax) {
  require(b >= 2, "raw_moment_series: base must be >= 2");
  std::vector<RationalFunction> out;
  out.reserve(imax + 1);
  BivariateRationalFunction H = build_H(b);
  out.push_back(reduce_moment(H, 0));
  for (unsigned i = 1; i <= imax; ++i) {
    H.apply_t_log_derivative();
    out.push_back(reduce_moment(H, i));
  }
  return out;
}

RationalFunction raw_moment_series(long b, unsigned i) {
  return raw_moment_series_upto(b, i).back();
}

namespace {

BigRational binom(long n, long k) {
  if (k < 0 || k > n) return BigRational(0);
  BigRational r(1);
  for (long j = 0; j < k; ++j) r = r * BigRational(n - j) / BigRational(j + 1);
  return r;
}

}  // namespace

MomentReport conditional_moments(long b, long n, unsigned imax, unsigned scaled_decimals) {
  require(b >= 2 && n >= 0, "conditional_moments: bad parameters");
  require(imax >= 2, "conditional_moments: need imax >= 2");
  MomentReport rep;
  rep.b = b;
  rep.n = n;
  rep.imax = imax;
  rep.scaled_decimals = scaled_decimals;

  std::vector<RationalFunction> M = raw_moment_series_upto(b, imax);
  const size_t count = static_cast<size_t>(n) + 1;
  BigRational a = M[0].series(count).back();
  if (a.is_zero())
    throw std::domain_error("conditional_moments: a_b(n) = 0, nothing to condition on");

  rep.raw.resize(imax + 1);
  for (unsigned i = 0; i <= imax; ++i) rep.raw[i] = M[i].series(count).back() / a;
  if (rep.raw[0] != BigRational(1))
    throw std::logic_error("conditional_moments: raw moment 0 must be 1");

  const BigRational& mu = rep.raw[1];
  rep.central.resize(imax + 1);
  for (unsigned i = 0; i <= imax; ++i) {
    // E[(K-mu)^i] = sum_j C(i,j) raw_j (-mu)^{i-j}
    BigRational acc(0);
    BigRational negmu_pow(1);
    for (long j = static_cast<long>(i); j >= 0; --j) {
      acc += binom(static_cast<long>(i), j) * rep.raw[static_cast<size_t>(j)] * negmu_pow;
      negmu_pow *= -mu;
    }
    rep.central[i] = acc;
  }
  if (!rep.central[1].is_zero())
    throw std::logic_error("conditional_moments: central moment 1 must vanish");
  if (rep.central[2].sign() < 0)
    throw std::logic_error("conditional_moments: variance must be nonnegative");

  rep.scaled.resize(imax + 1);
  const BigRational& var = rep.central[2];
  for (unsigned i = 0; i <= imax; ++i) {
    if (var.is_zero()) {
      rep.scaled[i] = i == 0 ? "1" : "0";
      continue;
    }
    if (i % 2 == 0) {
      // central_i / var^{i/2} is rational; truncate its exact decimal
      rep.scaled[i] =
          decimal_truncate(rep.central[i] / var.pow(static_cast<long>(i / 2)), scaled_decimals);
    } else {
      // |central_i| / var^{i/2} = sqrt(central_i^2 / var^i); floor(10^d * .)
      BigRational ratio = rep.central[i] * rep.central[i] / var.pow(static_cast<long>(i));
      BigInt digits = sqrt_floor_scaled(ratio, scaled_decimals);
      rep.scaled[i] = decimal_place_point(digits, scaled_decimals, rep.central[i].sign() < 0);
    }
  }
  return rep;
}

std::vector<AsymptoticPolynomial> asymptotic_moments_upto(long b, unsigned imax, bool centered) {
  require(b >= 2, "asymptotic_moments: base must be >= 2");
  std::vector<RationalFunction> M = raw_moment_series_upto(b, imax);
  std::vector<Polynomial> raw_poly(imax + 1);
  raw_poly[0] = Polynomial(BigRational(1));
  const BigRational half_b(b, 2);  // limit of 1/a_b(n)
  for (unsigned j = 1; j <= imax; ++j) {
    auto pp = M[j].laurent_principal_at(BigRational(1));
    if (pp.order != static_cast<long>(j) + 1)
      throw std::logic_error("asymptotic_moment: unexpected pole order");
    // a_{-p} (x-1)^{-p} = (-1)^p a_{-p} (1-x)^{-p} contributes the coefficient
    // (-1)^p a_{-p} binomial(n+p-1, p-1), a degree-(p-1) polynomial in n.
    Polynomial acc;
    for (long u = 0; u < pp.order; ++u) {
      long p = pp.order - u;
      BigRational c = pp.coeff[static_cast<size_t>(u)];
      if (p % 2 == 1) c = -c;
      Polynomial bin(BigRational(1));  // binomial(n+p-1, p-1) as a polynomial in n
      BigRational fact(1);
      for (long l = 1; l <= p - 1; ++l) {
        bin = bin * Polynomial({BigRational(l), BigRational(1)});
        fact *= BigRational(l);
      }
      acc = acc + (c / fact) * bin;
    }
    raw_poly[j] = half_b * acc;
  }

  std::vector<AsymptoticPolynomial> out(imax + 1);
  const Polynomial neg_mu = imax >= 1 ? -raw_poly[1] : Polynomial();
  for (unsigned i = 0; i <= imax; ++i) {
    out[i].b = b;
    out[i].i = i;
    out[i].centered = centered;
    if (!centered) {
      out[i].poly = raw_poly[i];
      continue;
    }
    // centered: sum_j C(i,j) R_j(n) (-R_1(n))^{i-j}
    Polynomial acc;
    for (unsigned j = 0; j <= i; ++j) {
      Polynomial term = binom(static_cast<long>(i), static_cast<long>(j)) * raw_poly[j];
      for (unsigned l = 0; l < i - j; ++l) term = term * neg_mu;
      acc = acc + term;
    }
    out[i].poly = acc;
  }
  return out;
}

AsymptoticPolynomial asymptotic_moment(long b, unsigned i, bool centered) {
  require(i >= 1, "asymptotic_moment: need i >= 1");
  return asymptotic_moments_upto(b, i, centered).back();
}

BruteForceResult brute_force_hit(long b, long n, unsigned L) {
  require(b >= 2 && n >= 0 && L >= 1, "brute_force_hit: bad parameters");
  double budget = 1.0;
  for (unsigned k = 0; k < L; ++k) {
    budget *= static_cast<double>(b);
    if (budget > 1e7) throw std::invalid_argument("brute_force_hit: b^L exceeds 10^7");
  }
  BruteForceResult out;
  if (n == 0) {
    out.A.assign(L + 1, BigRational(0));
    out.A[0] = BigRational(1);  // every string is evil at location 0
    out.hit_mass = BigRational(1);
    out.undecided_mass = BigRational(0);
    return out;
  }

  std::vector<BigInt> weights(L + 1);  // completions of a length-k prefix
  for (unsigned k = 0; k <= L; ++k) weights[k] = BigInt(b).pow(L - k);
  std::vector<BigInt> hit_count(L + 1, BigInt(0));
  std::map<long, BigInt> undecided;

  // DFS over digit strings (first digit nonzero), cutting each branch as soon
  // as the partial sum reaches or passes n. Invariant: every open frame has
  // partial sum strictly below n.
  struct Frame {
    long digit;
    long sum;  // partial sum before this position
  };
  std::vector<Frame> stack;
  stack.push_back({1, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.digit >= b) {
      stack.pop_back();
      if (!stack.empty()) ++stack.back().digit;
      continue;
    }
    long depth = static_cast<long>(stack.size());
    long s = f.sum + f.digit;
    if (s == n) {
      hit_count[static_cast<size_t>(depth)] += weights[static_cast<size_t>(depth)];
      ++f.digit;
    } else if (s > n) {
      ++f.digit;  // overshot: never evil on any completion
    } else if (depth == static_cast<long>(L)) {
      undecided[s] += BigInt(1);
      ++f.digit;
    } else {
      stack.push_back({0, s});
    }
  }

  const BigRational total(BigInt(b - 1) * BigInt(b).pow(L - 1));
  out.A.resize(L + 1);
  out.hit_mass = BigRational(0);
  for (unsigned k = 1; k <= L; ++k) {
    out.A[k] = BigRational(hit_count[k]) / total;
    out.hit_mass += out.A[k];
  }
  out.undecided_mass = BigRational(0);
  for (const auto& [s, cnt] : undecided) {
    BigRational mass = BigRational(cnt) / total;
    out.undecided[s] = mass;
    out.undecided_mass += mass;
  }
  return out;
}

}  // namespace evilnum::gf
