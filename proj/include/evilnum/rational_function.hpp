#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "evilnum/polynomial.hpp"

namespace evilnum {

// Quotient of polynomials, canonical on construction:
//   - numerator and denominator coprime (reduced via primitive-PRS gcd),
//   - denominator has primitive integer coefficients with positive leading one.
// With that normalization two equal rational functions have equal parts, so
// operator== is plain structural comparison.
class RationalFunction {
 public:
  struct reduced_t {};  // tag: caller guarantees num/den are already coprime
  static constexpr reduced_t reduced{};

  RationalFunction() : num_(), den_(BigRational(1)) {}
  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    Polynomial g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.div_exact(g);
      den_ = den_.div_exact(g);
    }
    normalize_den();
  }
  RationalFunction(Polynomial num, Polynomial den, reduced_t)
      : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    normalize_den();
  }
  RationalFunction(const Polynomial& p) : num_(p), den_(BigRational(1)) {}  // NOLINT
  RationalFunction(const BigRational& c) : num_(c), den_(BigRational(1)) {}  // NOLINT
  RationalFunction(long c) : num_(BigRational(c)), den_(BigRational(1)) {}   // NOLINT

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction operator-() const {
    RationalFunction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

  BigRational eval(const BigRational& x) const {
    BigRational d = den_.eval(x);
    if (d.is_zero()) throw std::domain_error("RationalFunction: pole at evaluation point");
    return num_.eval(x) / d;
  }

  // First count Maclaurin coefficients; requires den(0) != 0.
  std::vector<BigRational> series(size_t count) const {
    BigRational d0 = den_.coeff(0);
    if (d0.is_zero()) throw std::domain_error("RationalFunction: series needs den(0) != 0");
    std::vector<BigRational> c(count);
    size_t dd = static_cast<size_t>(den_.degree());
    for (size_t k = 0; k < count; ++k) {
      BigRational acc = num_.coeff(k);
      size_t jmax = std::min(k, dd);
      for (size_t j = 1; j <= jmax; ++j) acc -= den_.coeff(j) * c[k - j];
      c[k] = acc / d0;
    }
    return c;
  }

  // First count Taylor coefficients around x = center (center must not be a pole).
  std::vector<BigRational> taylor_at(const BigRational& center, size_t count) const {
    RationalFunction shifted(num_.shift_to(center), den_.shift_to(center), reduced);
    return shifted.series(count);
  }

  long pole_order_at(const BigRational& c) const {
    if (!den_.eval(c).is_zero()) return 0;
    long vd = den_.valuation_at(c).first;
    long vn = num_.is_zero() ? vd : num_.valuation_at(c).first;
    return vd - std::min(vn, vd);
  }

  // Laurent principal part at x = center: coefficients a_{-order} ... a_{-1}
  // of num/den = sum_j a_j (x-center)^j. Empty when there is no pole.
  struct LaurentPrincipal {
    long order = 0;
    std::vector<BigRational> coeff;  // coeff[j] = a_{-order+j}, j = 0..order-1
  };
  LaurentPrincipal laurent_principal_at(const BigRational& center) const {
    LaurentPrincipal out;
    if (is_zero()) return out;
    Polynomial ns = num_.shift_to(center);
    Polynomial ds = den_.shift_to(center);
    auto [vn, nred] = ns.valuation_at(BigRational(0));
    auto [vd, dred] = ds.valuation_at(BigRational(0));
    // valuation_at(0) strips powers of y directly
    long order = vd - vn;
    if (order <= 0) return out;
    out.order = order;
    RationalFunction local(std::move(nred), std::move(dred), reduced);
    out.coeff = local.series(static_cast<size_t>(order));
    return out;
  }

  std::string to_string(const std::string& var = "x") const {
    if (den_ == Polynomial(BigRational(1))) return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
  }

 private:
  // Scale so den has primitive integer coefficients, positive leading one.
  void normalize_den() {
    if (num_.is_zero()) {
      den_ = Polynomial(BigRational(1));
      return;
    }
    auto [ints, scale] = den_.to_primitive_integer();
    den_ = Polynomial::from_integer(ints);
    num_ = num_ * (BigRational(1) / scale);
  }

  Polynomial num_, den_;
};

}  // namespace evilnum
