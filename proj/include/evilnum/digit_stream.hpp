#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "evilnum/rational.hpp"

namespace evilnum::streams {

// Raised when a digit cannot be certified: precision-escalation cap reached,
// or the two independent pi series disagree beyond their error budgets.
class CertificationError : public std::runtime_error {
 public:
  explicit CertificationError(const std::string& what) : std::runtime_error(what) {}
};

enum class ConstantKind {
  rational,          // p/q
  sqrt,              // sqrt(m), m >= 0
  golden_minus_one,  // (sqrt(5)-1)/2
  golden,            // (1+sqrt(5))/2
  pi,
  e,
  champernowne,      // base-dependent 0.123...(b-1)10 11 12...
  pi_times_sqrt,     // pi * sqrt(x), x >= 1
  rational_times_pi, // p * pi, p >= 1
  file,              // digit expansion read from a text file
};

struct ConstantDescriptor {
  ConstantKind kind = ConstantKind::rational;
  BigInt p{0}, q{1};  // rational / rational_times_pi
  long m = 0;         // sqrt / pi_times_sqrt argument
  std::string path;   // file

  static ConstantDescriptor make_rational(BigInt p, BigInt q);
  static ConstantDescriptor make_sqrt(long m);
  static ConstantDescriptor make_simple(ConstantKind k);  // golden/golden-1/pi/e/champernowne
  static ConstantDescriptor make_pi_times_sqrt(long x);
  static ConstantDescriptor make_rational_times_pi(BigInt p);
  static ConstantDescriptor make_file(std::string path);
};

// Parse the textual constant grammar used on the command line:
//   pi | e | golden | golden-1 | champernowne
//   sqrt <m> | rational <p>/<q> | pi*sqrt <x> | <p>*pi | file <path>
// Tokens are separated by whitespace. Throws std::invalid_argument on
// malformed input.
ConstantDescriptor parse_constant(const std::string& text);
std::string to_string(const ConstantDescriptor& c);

// Scaled integer snapshot of a constant: value = mantissa / base^scale with
// |true value - mantissa/b^scale| <= error_bound * b^{-scale}, error_bound <= 1.
struct FixedPointValue {
  BigInt mantissa;
  long scale = 0;
  long base = 10;
  BigRational error_bound;
};

// floor(value * b^H) with a certified error bound. Internal work precision
// carries 2*ceil(log_b H) + 16 guard digits and escalates (doubling, capped)
// if the value sits too close to an integer boundary at the working guard.
FixedPointValue compute_fixed_point(const ConstantDescriptor& c, long b, long H);

// pi alone, always computed from two independent arctan decompositions
// (16 atan 1/5 - 4 atan 1/239 and 8 atan 1/3 + 4 atan 1/7) whose certified
// intervals must overlap and whose midpoints must agree to 2 ulp; a violation
// raises CertificationError. Results are memoized per base at monotonically
// increasing precision.
FixedPointValue pi_fixed_point(long b, long H);

// Digits of Champernowne's base-b constant: the concatenation of 1,2,3,...
// written in base b.
std::vector<int> champernowne_digits(long b, long count);
// Digit at a given 1-based position of that concatenation, by positional
// arithmetic on the length blocks (no prefix materialization).
int champernowne_digit_at(long b, const BigInt& index);

// Pull stream over the significant digits of a constant's canonical base-b
// expansion: integer-part digits first (no leading zeros; none when the
// integer part is 0), then fractional digits starting at the first nonzero
// digit for values < 1. Terminating expansions keep yielding 0 once the
// significant digits run out (tail_is_zero() turns true). Irrational
// constants escalate their working precision on demand; digits already
// emitted never change (nested-floor stability, asserted on every
// escalation).
class DigitStream {
 public:
  // initial_fraction_digits: fractional precision H of the first fixed-point
  // snapshot (doubled on exhaustion, at most max_escalations times).
  explicit DigitStream(ConstantDescriptor c, long base, long initial_fraction_digits = 64,
                       int max_escalations = 8);

  long base() const { return base_; }
  const ConstantDescriptor& descriptor() const { return c_; }

  // Next digit of the expansion (0s forever once a terminating expansion is
  // exhausted). Throws CertificationError if certified digits run out and the
  // escalation cap is hit.
  int next();
  // True when every digit from the current position on is 0.
  bool tail_is_zero();
  // Digits emitted so far.
  long emitted() const { return emitted_; }
  // Digits before the base-b point (0 for values < 1).
  long integer_digit_count();

 private:
  void ensure_ready();
  void refill();

  ConstantDescriptor c_;
  long base_;
  long h_;
  int escalations_left_;
  bool ready_ = false;

  // exact generators
  bool exact_ = false;       // rational / file / champernowne
  bool terminated_ = false;  // all remaining digits are zero
  bool skip_zeros_ = false;  // still before the first significant digit
  BigInt rem_{0}, den_{1};   // rational long-division state
  std::vector<int> buf_;     // buffered significant digits not yet emitted
  size_t buf_pos_ = 0;
  BigInt champ_next_{1};     // next integer to concatenate

  // fixed-point digits (irrational engines)
  std::vector<int> digits_;
  size_t pos_ = 0;
  BigInt mantissa_{0};

  long int_digits_ = 0;
  long emitted_ = 0;
};

// Convenience: the first `count` digits of the expansion (terminating
// expansions are padded with their trailing zeros).
std::vector<int> digits(const ConstantDescriptor& c, long b, long count);

// Parse a digit-expansion file: one line of base-b digits with an optional
// point character; whitespace is ignored. Returns the exact value as a
// rational. Throws std::invalid_argument on characters invalid for the base.
BigRational parse_digit_file(const std::string& path, long b);

}  // namespace evilnum::streams
