#pragma once

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "evilnum/rational.hpp"

namespace evilnum {

// Dense univariate polynomial with exact rational coefficients.
// Invariant: no trailing zero coefficients (zero polynomial has empty storage).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<BigRational> coeffs) : c_(coeffs) { trim(); }
  Polynomial(const BigRational& constant) : c_{constant} { trim(); }  // NOLINT
  Polynomial(long constant) : c_{BigRational(constant)} { trim(); }   // NOLINT

  static Polynomial monomial(BigRational coeff, size_t deg) {
    std::vector<BigRational> v(deg + 1);
    v[deg] = std::move(coeff);
    return Polynomial(std::move(v));
  }
  // 1 + x + ... + x^k
  static Polynomial geometric(size_t k) {
    std::vector<BigRational> v(k + 1, BigRational(1));
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  BigRational coeff(size_t i) const { return i < c_.size() ? c_[i] : BigRational(0); }
  const BigRational& leading() const {
    if (c_.empty()) throw std::domain_error("Polynomial: leading of zero");
    return c_.back();
  }
  const std::vector<BigRational>& coeffs() const { return c_; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<BigRational> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<BigRational> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return Polynomial(std::move(r));
  }
  Polynomial operator-() const {
    std::vector<BigRational> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<BigRational> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const BigRational& s, const Polynomial& p) {
    if (s.is_zero()) return Polynomial();
    std::vector<BigRational> r(p.c_.size());
    for (size_t i = 0; i < p.c_.size(); ++i) r[i] = s * p.c_[i];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Polynomial& p, const BigRational& s) { return s * p; }

  Polynomial pow(unsigned long e) const {
    Polynomial r(BigRational(1));
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return r;
  }

  // Field division with remainder: *this = q*d + r, deg r < deg d.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("Polynomial: division by zero polynomial");
    std::vector<BigRational> rem = c_;
    std::vector<BigRational> quo;
    long dd = d.degree();
    if (degree() >= dd) quo.assign(static_cast<size_t>(degree() - dd) + 1, BigRational(0));
    const BigRational& lead = d.leading();
    for (long i = degree(); i >= dd; --i) {
      size_t ui = static_cast<size_t>(i);
      if (rem[ui].is_zero()) continue;
      BigRational f = rem[ui] / lead;
      quo[static_cast<size_t>(i - dd)] = f;
      for (long j = 0; j <= dd; ++j)
        rem[static_cast<size_t>(i - dd + j)] -= f * d.c_[static_cast<size_t>(j)];
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
  }
  // Exact quotient; throws if the division leaves a remainder.
  Polynomial div_exact(const Polynomial& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::domain_error("Polynomial: inexact division");
    return q;
  }

  BigRational eval(const BigRational& x) const {  // Horner
    BigRational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<BigRational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = BigRational(static_cast<long>(i)) * c_[i];
    return Polynomial(std::move(r));
  }

  // Coefficients of p(center + y) as a polynomial in y (exact Taylor shift),
  // by repeated synthetic division: the remainders are the Taylor coefficients.
  Polynomial shift_to(const BigRational& center) const {
    std::vector<BigRational> work = c_;
    std::vector<BigRational> out(c_.size());
    for (size_t k = 0; k < c_.size(); ++k) {
      // divide work by (x - center): remainder -> out[k]
      BigRational rem(0);
      for (size_t i = work.size(); i-- > 0;) {
        BigRational t = work[i] + rem * center;
        work[i] = rem;
        rem = std::move(t);
      }
      out[k] = std::move(rem);
      if (!work.empty()) work.pop_back();
    }
    return Polynomial(std::move(out));
  }

  // Largest v with (x - c)^v dividing p (0 for p(c) != 0); also returns p/(x-c)^v.
  std::pair<long, Polynomial> valuation_at(const BigRational& c) const {
    if (is_zero()) throw std::domain_error("Polynomial: valuation of zero polynomial");
    Polynomial p = *this;
    long v = 0;
    while (p.eval(c).is_zero()) {
      // synthetic division by (x - c), known exact
      std::vector<BigRational> q(p.c_.size() - 1);
      BigRational carry(0);
      for (size_t i = p.c_.size(); i-- > 1;) {
        carry = p.c_[i] + carry * c;
        q[i - 1] = carry;
      }
      p = Polynomial(std::move(q));
      ++v;
      if (p.is_zero()) break;
    }
    return {v, p};
  }

  // Smallest power of x with nonzero coefficient (x-adic valuation).
  long valuation_at_zero() const {
    for (size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return static_cast<long>(i);
    return -1;  // zero polynomial
  }

  // Integer-coefficient image: returns primitive integer coefficients I and a
  // rational scale s with p = s * I(x); I has positive leading coefficient.
  // The zero polynomial maps to (empty, 0).
  std::pair<std::vector<BigInt>, BigRational> to_primitive_integer() const {
    if (is_zero()) return {{}, BigRational(0)};
    BigInt l(1);
    for (const auto& c : c_) l = lcm(l, c.den());
    std::vector<BigInt> ints(c_.size());
    BigInt g(0);
    for (size_t i = 0; i < c_.size(); ++i) {
      ints[i] = c_[i].num() * l.divexact(c_[i].den());
      g = gcd(g, ints[i]);
    }
    if (ints.back().sign() < 0) g = -g;
    for (auto& v : ints) v = v.divexact(g);
    return {std::move(ints), BigRational(g, l)};
  }

  static Polynomial from_integer(const std::vector<BigInt>& ints) {
    std::vector<BigRational> r(ints.size());
    for (size_t i = 0; i < ints.size(); ++i) r[i] = BigRational(ints[i]);
    return Polynomial(std::move(r));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<BigRational> c_;
};

namespace detail {

// Content (gcd of coefficients) of an integer-coefficient polynomial.
inline BigInt int_content(const std::vector<BigInt>& p) {
  BigInt g(0);
  for (const auto& c : p) g = gcd(g, c);
  return g;
}

inline void int_trim(std::vector<BigInt>& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Pseudo-remainder of a by b: rem(lead(b)^(deg a - deg b + 1) * a, b),
// computed fraction-free.
inline std::vector<BigInt> pseudo_rem(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  const BigInt& lb = b.back();
  long db = static_cast<long>(b.size()) - 1;
  while (static_cast<long>(a.size()) - 1 >= db && !a.empty()) {
    long da = static_cast<long>(a.size()) - 1;
    BigInt la = a.back();
    for (auto& c : a) c = c * lb;
    for (long j = 0; j <= db; ++j)
      a[static_cast<size_t>(da - db + j)] -= la * b[static_cast<size_t>(j)];
    int_trim(a);
  }
  return a;
}

}  // namespace detail

// Primitive gcd via the primitive polynomial remainder sequence.
// Returns a primitive integer-coefficient polynomial with positive leading
// coefficient (constant 1 when the inputs are coprime); gcd(p, 0) = primitive(p).
inline Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) return Polynomial();
  if (a.is_zero()) return Polynomial::from_integer(b.to_primitive_integer().first);
  if (b.is_zero()) return Polynomial::from_integer(a.to_primitive_integer().first);
  std::vector<BigInt> u = a.to_primitive_integer().first;
  std::vector<BigInt> v = b.to_primitive_integer().first;
  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    std::vector<BigInt> r = detail::pseudo_rem(u, v);
    if (!r.empty()) {
      BigInt c = detail::int_content(r);
      if (r.back().sign() < 0) c = -c;
      for (auto& x : r) x = x.divexact(c);
    }
    u = std::move(v);
    v = std::move(r);
  }
  if (u.back().sign() < 0)
    for (auto& x : u) x = -x;
  return Polynomial::from_integer(u);
}

inline std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = c_.size(); i-- > 0;) {
    const BigRational& c = c_[i];
    if (c.is_zero()) continue;
    std::string cs = c.abs().to_string();
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? "-" : "+";
    }
    if (i == 0) {
      out += cs;
    } else {
      if (cs != "1") out += cs + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace evilnum
