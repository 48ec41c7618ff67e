#pragma once

#include <gmp.h>

#include <cstring>
#include <stdexcept>
#include <string>
#include <utility>

namespace evilnum {

namespace detail {
inline std::string gmp_str(char* s) {
  std::string out(s);
  void (*freef)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freef);
  freef(s, std::strlen(s) + 1);
  return out;
}
}  // namespace detail

// Arbitrary-size integer; thin RAII wrapper over GMP's mpz_t.
class BigInt {
 public:
  BigInt() { mpz_init(z_); }
  BigInt(long v) { mpz_init_set_si(z_, v); }  // NOLINT: implicit by design
  explicit BigInt(const std::string& s, int base = 10) {
    if (mpz_init_set_str(z_, s.c_str(), base) != 0) {
      mpz_clear(z_);
      throw std::invalid_argument("BigInt: bad integer literal: " + s);
    }
  }
  BigInt(const BigInt& o) { mpz_init_set(z_, o.z_); }
  BigInt(BigInt&& o) noexcept {
    mpz_init(z_);
    mpz_swap(z_, o.z_);
  }
  BigInt& operator=(const BigInt& o) {
    if (this != &o) mpz_set(z_, o.z_);
    return *this;
  }
  BigInt& operator=(BigInt&& o) noexcept {
    mpz_swap(z_, o.z_);
    return *this;
  }
  ~BigInt() { mpz_clear(z_); }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_add(r.z_, a.z_, b.z_);
    return r;
  }
  friend BigInt operator-(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_sub(r.z_, a.z_, b.z_);
    return r;
  }
  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_mul(r.z_, a.z_, b.z_);
    return r;
  }
  // Truncated quotient (rounds toward zero), like C integer division.
  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    if (mpz_sgn(b.z_) == 0) throw std::domain_error("BigInt: division by zero");
    BigInt r;
    mpz_tdiv_q(r.z_, a.z_, b.z_);
    return r;
  }
  friend BigInt operator%(const BigInt& a, const BigInt& b) {
    if (mpz_sgn(b.z_) == 0) throw std::domain_error("BigInt: division by zero");
    BigInt r;
    mpz_tdiv_r(r.z_, a.z_, b.z_);
    return r;
  }
  BigInt operator-() const {
    BigInt r;
    mpz_neg(r.z_, z_);
    return r;
  }
  BigInt& operator+=(const BigInt& o) {
    mpz_add(z_, z_, o.z_);
    return *this;
  }
  BigInt& operator-=(const BigInt& o) {
    mpz_sub(z_, z_, o.z_);
    return *this;
  }
  BigInt& operator*=(const BigInt& o) {
    mpz_mul(z_, z_, o.z_);
    return *this;
  }

  // Floor quotient: largest q with q*b <= a (b > 0).
  BigInt fdiv(const BigInt& b) const {
    if (mpz_sgn(b.z_) == 0) throw std::domain_error("BigInt: division by zero");
    BigInt r;
    mpz_fdiv_q(r.z_, z_, b.z_);
    return r;
  }
  // Exact quotient; caller guarantees divisibility.
  BigInt divexact(const BigInt& b) const {
    BigInt r;
    mpz_divexact(r.z_, z_, b.z_);
    return r;
  }
  BigInt abs() const {
    BigInt r;
    mpz_abs(r.z_, z_);
    return r;
  }
  BigInt pow(unsigned long e) const {
    BigInt r;
    mpz_pow_ui(r.z_, z_, e);
    return r;
  }
  static BigInt pow_ui(unsigned long base, unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.z_, base, e);
    return r;
  }
  friend BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.z_, a.z_, b.z_);
    return r;
  }
  friend BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.z_, a.z_, b.z_);
    return r;
  }
  BigInt mul_2exp(unsigned long k) const {
    BigInt r;
    mpz_mul_2exp(r.z_, z_, k);
    return r;
  }
  BigInt div_2exp(unsigned long k) const {  // truncating shift
    BigInt r;
    mpz_tdiv_q_2exp(r.z_, z_, k);
    return r;
  }

  int sign() const { return mpz_sgn(z_); }
  bool is_zero() const { return mpz_sgn(z_) == 0; }
  bool odd() const { return mpz_odd_p(z_) != 0; }
  size_t bit_length() const { return is_zero() ? 0 : mpz_sizeinbase(z_, 2); }
  bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
  long to_long() const {
    if (!fits_long()) throw std::overflow_error("BigInt: does not fit long");
    return mpz_get_si(z_);
  }

  friend int cmp(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_); }
  friend bool operator==(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) == 0; }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) < 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) <= 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) > 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) >= 0; }

  // Digits in the given base, lowercase for digit values >= 10; no sign for abs.
  std::string to_string(int base = 10) const {
    return detail::gmp_str(mpz_get_str(nullptr, base, z_));
  }

  mpz_srcptr raw() const { return z_; }
  mpz_ptr raw() { return z_; }

 private:
  mpz_t z_;
};

// Exact rational; always canonical (reduced, positive denominator).
class BigRational {
 public:
  BigRational() { mpq_init(q_); }
  BigRational(long v) {  // NOLINT: implicit by design
    mpq_init(q_);
    mpq_set_si(q_, v, 1);
  }
  BigRational(long num, long den) {
    if (den == 0) throw std::domain_error("BigRational: zero denominator");
    mpq_init(q_);
    mpq_set_si(q_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(q_, q_, d);
    mpq_clear(d);
  }
  BigRational(const BigInt& v) {  // NOLINT: implicit by design
    mpq_init(q_);
    mpq_set_z(q_, v.raw());
  }
  BigRational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw std::domain_error("BigRational: zero denominator");
    mpq_init(q_);
    mpz_set(mpq_numref(q_), num.raw());
    mpz_set(mpq_denref(q_), den.raw());
    mpq_canonicalize(q_);
  }
  // Accepts "p", "p/q", optionally signed.
  explicit BigRational(const std::string& s) {
    mpq_init(q_);
    if (mpq_set_str(q_, s.c_str(), 10) != 0) {
      mpq_clear(q_);
      throw std::invalid_argument("BigRational: bad rational literal: " + s);
    }
    if (mpz_sgn(mpq_denref(q_)) == 0) {
      mpq_clear(q_);
      throw std::domain_error("BigRational: zero denominator");
    }
    mpq_canonicalize(q_);
  }
  BigRational(const BigRational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  BigRational(BigRational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  BigRational& operator=(const BigRational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  BigRational& operator=(BigRational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }
  ~BigRational() { mpq_clear(q_); }

  friend BigRational operator+(const BigRational& a, const BigRational& b) {
    BigRational r;
    mpq_add(r.q_, a.q_, b.q_);
    return r;
  }
  friend BigRational operator-(const BigRational& a, const BigRational& b) {
    BigRational r;
    mpq_sub(r.q_, a.q_, b.q_);
    return r;
  }
  friend BigRational operator*(const BigRational& a, const BigRational& b) {
    BigRational r;
    mpq_mul(r.q_, a.q_, b.q_);
    return r;
  }
  friend BigRational operator/(const BigRational& a, const BigRational& b) {
    if (mpq_sgn(b.q_) == 0) throw std::domain_error("BigRational: division by zero");
    BigRational r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
  }
  BigRational operator-() const {
    BigRational r;
    mpq_neg(r.q_, q_);
    return r;
  }
  BigRational& operator+=(const BigRational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  BigRational& operator-=(const BigRational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  BigRational& operator*=(const BigRational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }
  BigRational& operator/=(const BigRational& o) {
    if (mpq_sgn(o.q_) == 0) throw std::domain_error("BigRational: division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
  }

  BigRational abs() const {
    BigRational r;
    mpq_abs(r.q_, q_);
    return r;
  }
  // Integer exponent; negative exponents invert (value must be nonzero).
  BigRational pow(long e) const {
    if (e < 0) {
      if (is_zero()) throw std::domain_error("BigRational: 0^negative");
      return (BigRational(1) / *this).pow(-e);
    }
    BigRational r;
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(q_), static_cast<unsigned long>(e));
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(q_), static_cast<unsigned long>(e));
    return r;  // powers of a canonical rational stay canonical
  }

  BigInt num() const {
    BigInt r;
    mpz_set(r.raw(), mpq_numref(q_));
    return r;
  }
  BigInt den() const {
    BigInt r;
    mpz_set(r.raw(), mpq_denref(q_));
    return r;
  }
  BigInt floor() const {
    BigInt r;
    mpz_fdiv_q(r.raw(), mpq_numref(q_), mpq_denref(q_));
    return r;
  }

  int sign() const { return mpq_sgn(q_); }
  bool is_zero() const { return mpq_sgn(q_) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

  friend int cmp(const BigRational& a, const BigRational& b) { return mpq_cmp(a.q_, b.q_); }
  friend bool operator==(const BigRational& a, const BigRational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend bool operator!=(const BigRational& a, const BigRational& b) { return !(a == b); }
  friend bool operator<(const BigRational& a, const BigRational& b) {
    return mpq_cmp(a.q_, b.q_) < 0;
  }
  friend bool operator<=(const BigRational& a, const BigRational& b) {
    return mpq_cmp(a.q_, b.q_) <= 0;
  }
  friend bool operator>(const BigRational& a, const BigRational& b) {
    return mpq_cmp(a.q_, b.q_) > 0;
  }
  friend bool operator>=(const BigRational& a, const BigRational& b) {
    return mpq_cmp(a.q_, b.q_) >= 0;
  }

  // "p/q", or just "p" when the value is an integer.
  std::string to_string() const { return detail::gmp_str(mpq_get_str(nullptr, 10, q_)); }

  mpq_srcptr raw() const { return q_; }

 private:
  mpq_t q_;
};

}  // namespace evilnum
