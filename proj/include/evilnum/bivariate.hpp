#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "evilnum/rational_function.hpp"

namespace evilnum {

// Polynomial in t whose coefficients are polynomials in x.
// Invariant: no trailing zero t-coefficients.
class BivariatePoly {
 public:
  BivariatePoly() = default;
  explicit BivariatePoly(std::vector<Polynomial> tc) : t_(std::move(tc)) { trim(); }
  BivariatePoly(const Polynomial& constant_in_t) : t_{constant_in_t} { trim(); }  // NOLINT

  bool is_zero() const { return t_.empty(); }
  long tdegree() const { return static_cast<long>(t_.size()) - 1; }
  Polynomial tcoeff(size_t k) const { return k < t_.size() ? t_[k] : Polynomial(); }

  friend BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) {
    std::vector<Polynomial> r(std::max(a.t_.size(), b.t_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.tcoeff(i) + b.tcoeff(i);
    return BivariatePoly(std::move(r));
  }
  friend BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b) {
    std::vector<Polynomial> r(std::max(a.t_.size(), b.t_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.tcoeff(i) - b.tcoeff(i);
    return BivariatePoly(std::move(r));
  }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    if (a.is_zero() || b.is_zero()) return BivariatePoly();
    std::vector<Polynomial> r(a.t_.size() + b.t_.size() - 1);
    for (size_t i = 0; i < a.t_.size(); ++i)
      for (size_t j = 0; j < b.t_.size(); ++j) r[i + j] = r[i + j] + a.t_[i] * b.t_[j];
    return BivariatePoly(std::move(r));
  }
  friend BivariatePoly operator*(const Polynomial& p, const BivariatePoly& b) {
    std::vector<Polynomial> r(b.t_.size());
    for (size_t i = 0; i < b.t_.size(); ++i) r[i] = p * b.t_[i];
    return BivariatePoly(std::move(r));
  }

  BivariatePoly diff_t() const {
    if (t_.size() <= 1) return BivariatePoly();
    std::vector<Polynomial> r(t_.size() - 1);
    for (size_t k = 1; k < t_.size(); ++k)
      r[k - 1] = BigRational(static_cast<long>(k)) * t_[k];
    return BivariatePoly(std::move(r));
  }
  BivariatePoly mul_t() const {  // multiply by t
    if (is_zero()) return BivariatePoly();
    std::vector<Polynomial> r(t_.size() + 1);
    for (size_t k = 0; k < t_.size(); ++k) r[k + 1] = t_[k];
    return BivariatePoly(std::move(r));
  }

  Polynomial eval_t(const BigRational& t) const {  // Horner in t
    Polynomial acc;
    for (size_t i = t_.size(); i-- > 0;) acc = acc * Polynomial(t) + t_[i];
    return acc;
  }

  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) { return a.t_ == b.t_; }

 private:
  void trim() {
    while (!t_.empty() && t_.back().is_zero()) t_.pop_back();
  }
  std::vector<Polynomial> t_;
};

// Bivariate rational function kept in the structured form
//     num(x,t) / ( D(x,t)^m * E(x) ),
// which is closed under the operator t*d/dt:
//     t d/dt [ num / (D^m E) ] = t (num_t D - m num D_t) / (D^{m+1} E).
// Keeping the denominator in factored power form avoids any bivariate gcd.
class BivariateRationalFunction {
 public:
  BivariateRationalFunction(BivariatePoly num, BivariatePoly D, unsigned m, Polynomial E)
      : num_(std::move(num)), D_(std::move(D)), m_(m), E_(std::move(E)) {
    if (D_.is_zero() || E_.is_zero())
      throw std::domain_error("BivariateRationalFunction: zero denominator factor");
  }

  const BivariatePoly& num() const { return num_; }
  const BivariatePoly& D() const { return D_; }
  unsigned m() const { return m_; }
  const Polynomial& E() const { return E_; }

  // Apply t*d/dt once, in place.
  void apply_t_log_derivative() {
    Polynomial m_scale(BigRational(static_cast<long>(m_)));
    BivariatePoly dnum = num_.diff_t() * D_ - m_scale * (num_ * D_.diff_t());
    num_ = dnum.mul_t();
    m_ += 1;
  }

  // Substitute a numeric value for t.
  RationalFunction eval_t(const BigRational& t) const {
    Polynomial n = num_.eval_t(t);
    Polynomial d = D_.eval_t(t).pow(m_) * E_;
    return RationalFunction(std::move(n), std::move(d));
  }

  // Coefficient of t^k as a univariate rational function in x, by power-series
  // division in t over the field of rational functions. Requires the t-constant
  // part of the denominator to be nonzero.
  RationalFunction coeff_t(size_t k) const {
    // expanded denominator B(x,t) = D^m * E
    BivariatePoly B(Polynomial(BigRational(1)));
    for (unsigned i = 0; i < m_; ++i) B = B * D_;
    B = E_ * B;
    RationalFunction b0 = RationalFunction(B.tcoeff(0));
    if (b0.is_zero())
      throw std::domain_error("BivariateRationalFunction: t-series needs B(x,0) != 0");
    std::vector<RationalFunction> c(k + 1);
    for (size_t j = 0; j <= k; ++j) {
      RationalFunction acc = RationalFunction(num_.tcoeff(j));
      for (size_t i = 1; i <= j; ++i)
        acc = acc - RationalFunction(B.tcoeff(i)) * c[j - i];
      c[j] = acc / b0;
    }
    return c[k];
  }

 private:
  BivariatePoly num_;
  BivariatePoly D_;
  unsigned m_;
  Polynomial E_;
};

}  // namespace evilnum
