#pragma once

#include <stdexcept>

#include "evilnum/rational.hpp"

namespace evilnum {

// floor(sqrt(N)) for N >= 0, by integer Newton iteration with a final
// correction step; the result s is verified to satisfy s^2 <= N < (s+1)^2.
inline BigInt integer_sqrt(const BigInt& n) {
  if (n.sign() < 0) throw std::domain_error("integer_sqrt: negative argument");
  if (n.is_zero()) return BigInt(0);
  // initial overestimate: 2^ceil(bits/2) >= sqrt(n)
  size_t bits = n.bit_length();
  BigInt x = BigInt(1).mul_2exp(static_cast<unsigned long>((bits + 1) / 2));
  // Newton: x <- (x + n/x) / 2 decreases monotonically to floor(sqrt(n))
  // once above it, so stop when it would not decrease.
  while (true) {
    BigInt y = (x + n / x).div_2exp(1);
    if (y >= x) break;
    x = std::move(y);
  }
  // correction: Newton from an overestimate can land one too high
  while (x * x > n) x -= 1;
  while ((x + 1) * (x + 1) <= n) x += 1;
  return x;
}

// floor(sqrt(r)) digit-exact at a decimal scale: floor(sqrt(r) * 10^d)
// = integer_sqrt(floor(r * 10^{2d})) since floor(sqrt(z)) = isqrt(floor(z))
// for any rational z >= 0.
inline BigInt sqrt_floor_scaled(const BigRational& r, unsigned long d) {
  if (r.sign() < 0) throw std::domain_error("sqrt_floor_scaled: negative argument");
  BigInt z = (r * BigRational(BigInt(10).pow(2 * d))).floor();
  return integer_sqrt(z);
}

}  // namespace evilnum
