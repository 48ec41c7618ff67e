#pragma once

#include <stdexcept>
#include <string>

#include "evilnum/rational.hpp"

namespace evilnum {

// Exact decimal renderings of rationals. Everything here is integer
// arithmetic on the exact value; no binary floating point is involved.

// Truncated decimal with exactly frac_digits digits after the point.
inline std::string decimal_truncate(const BigRational& r, size_t frac_digits) {
  bool neg = r.sign() < 0;
  BigRational a = r.abs();
  BigInt scaled = (a * BigRational(BigInt(10).pow(frac_digits))).floor();
  std::string s = scaled.to_string();
  if (s.size() <= frac_digits) s.insert(0, frac_digits - s.size() + 1, '0');
  std::string out = s.substr(0, s.size() - frac_digits);
  if (frac_digits > 0) out += "." + s.substr(s.size() - frac_digits);
  return (neg && scaled.sign() != 0) ? "-" + out : out;
}

// Half-up rounded decimal with exactly frac_digits digits after the point.
inline std::string decimal_round(const BigRational& r, size_t frac_digits) {
  bool neg = r.sign() < 0;
  BigRational a = r.abs();
  BigRational scaled = a * BigRational(BigInt(10).pow(frac_digits));
  BigInt i = (scaled + BigRational(1, 2)).floor();
  std::string s = i.to_string();
  if (s.size() <= frac_digits) s.insert(0, frac_digits - s.size() + 1, '0');
  std::string out = s.substr(0, s.size() - frac_digits);
  if (frac_digits > 0) out += "." + s.substr(s.size() - frac_digits);
  return (neg && i.sign() != 0) ? "-" + out : out;
}

// Decimal string whose TOTAL length (sign and point included) is total_len,
// i.e. a "total_len-digits-long" decimal; truncated, never rounded.
inline std::string decimal_fixed_width(const BigRational& r, size_t total_len) {
  bool neg = r.sign() < 0;
  size_t used = (neg ? 1 : 0);
  BigInt ip = r.abs().floor();
  std::string ips = ip.to_string();
  used += ips.size();
  if (used + 2 > total_len) {
    // no room for a fractional part; emit the integer part as-is
    return (neg ? "-" : "") + ips;
  }
  size_t frac = total_len - used - 1;  // minus the point
  return decimal_truncate(r, frac);
}

// Decimal exponent e of |r|: the unique e with 10^e <= |r| < 10^{e+1}.
inline long decimal_exponent(const BigRational& r) {
  if (r.is_zero()) throw std::domain_error("decimal_exponent of zero");
  BigRational a = r.abs();
  // initial estimate from digit counts of numerator and denominator
  long e = static_cast<long>(a.num().to_string().size()) -
           static_cast<long>(a.den().to_string().size());
  auto pow10 = [](long k) {
    BigRational p(BigInt(10).pow(static_cast<unsigned long>(k < 0 ? -k : k)));
    return k < 0 ? BigRational(1) / p : p;
  };
  while (a < pow10(e)) --e;
  while (a >= pow10(e + 1)) ++e;
  return e;
}

// Significant-figure renderings. For |r| in [1, 10^sig) this is the familiar
// "sig significant digits" form (e.g. 148.6589406 at sig=10); values outside
// that window render in scientific notation d.ddd...e±k.
inline std::string sig_figs(const BigRational& r, size_t sig, bool round_half_up) {
  if (sig == 0) throw std::invalid_argument("sig_figs: need sig >= 1");
  if (r.is_zero()) {
    std::string z = "0";
    if (sig > 1) z += "." + std::string(sig - 1, '0');
    return z;
  }
  bool neg = r.sign() < 0;
  BigRational a = r.abs();
  long e = decimal_exponent(a);
  // digits = floor or round of a * 10^{sig-1-e}, a sig-digit integer
  long shift = static_cast<long>(sig) - 1 - e;
  BigRational scaled = a;
  if (shift >= 0)
    scaled = a * BigRational(BigInt(10).pow(static_cast<unsigned long>(shift)));
  else
    scaled = a / BigRational(BigInt(10).pow(static_cast<unsigned long>(-shift)));
  BigInt digits = round_half_up ? (scaled + BigRational(1, 2)).floor() : scaled.floor();
  std::string ds = digits.to_string();
  if (ds.size() == sig + 1) {  // rounding overflowed, e.g. 999.95 -> 1000.0
    ds.pop_back();
    ++e;
  }
  std::string body;
  if (e >= 0 && static_cast<size_t>(e) < sig) {
    body = ds.substr(0, static_cast<size_t>(e) + 1);
    if (static_cast<size_t>(e) + 1 < sig) body += "." + ds.substr(static_cast<size_t>(e) + 1);
  } else {
    body = ds.substr(0, 1);
    if (sig > 1) body += "." + ds.substr(1);
    body += "e" + std::string(e < 0 ? "-" : "+") + std::to_string(e < 0 ? -e : e);
  }
  return neg ? "-" + body : body;
}

inline std::string sig_figs_truncate(const BigRational& r, size_t sig) {
  return sig_figs(r, sig, false);
}
inline std::string sig_figs_round(const BigRational& r, size_t sig) {
  return sig_figs(r, sig, true);
}

// Decimal string of v/10^d with d digits after the point (v is the value
// already scaled by 10^d); the sign is carried separately so that -0.0x
// renders correctly.
inline std::string decimal_place_point(const BigInt& v, size_t d, bool negative) {
  std::string s = v.to_string();
  if (s.size() <= d) s.insert(0, d - s.size() + 1, '0');
  std::string out = s.substr(0, s.size() - d);
  if (d > 0) out += "." + s.substr(s.size() - d);
  return (negative && v.sign() != 0) ? "-" + out : out;
}

}  // namespace evilnum
