#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "evilnum/digit_stream.hpp"
#include "evilnum/isqrt.hpp"

using namespace evilnum;
using namespace evilnum::streams;

namespace {

std::vector<int> dv(std::initializer_list<int> l) { return std::vector<int>(l); }

std::string digit_str(const std::vector<int>& d) {
  std::string s;
  for (int x : d) s += static_cast<char>(x < 10 ? '0' + x : 'a' + x - 10);
  return s;
}

}  // namespace

TEST_CASE("integer square root") {
  CHECK(integer_sqrt(BigInt(0)) == BigInt(0));
  CHECK(integer_sqrt(BigInt(144)) == BigInt(12));
  CHECK(integer_sqrt(BigInt(143)) == BigInt(11));
  CHECK(integer_sqrt(BigInt(5) * BigInt(10).pow(20)) == BigInt("22360679774"));
  for (long n = 0; n <= 2000; ++n) {
    BigInt s = integer_sqrt(BigInt(n));
    CHECK(s * s <= BigInt(n));
    CHECK((s + BigInt(1)) * (s + BigInt(1)) > BigInt(n));
  }
}

TEST_CASE("fixed point of rationals is exact with an exact error bound") {
  auto fp = compute_fixed_point(ConstantDescriptor::make_rational(BigInt(1), BigInt(3)), 10, 5);
  CHECK(fp.mantissa == BigInt(33333));
  CHECK(fp.error_bound == BigRational(1, 3));
  auto half = compute_fixed_point(ConstantDescriptor::make_rational(BigInt(1), BigInt(2)), 10, 4);
  CHECK(half.mantissa == BigInt(5000));
  CHECK(half.error_bound == BigRational(0));
}

TEST_CASE("fixed point of sqrt(5)") {
  auto fp = compute_fixed_point(ConstantDescriptor::make_sqrt(5), 10, 10);
  CHECK(fp.mantissa == BigInt("22360679774"));
  CHECK(fp.error_bound < BigRational(1));
  CHECK(fp.error_bound.sign() > 0);
  // sqrt identity: 0 <= m*b^{2H} - mantissa^2 < 2*mantissa + 1
  BigInt N = BigInt(5) * BigInt(10).pow(20);
  BigInt r = N - fp.mantissa * fp.mantissa;
  CHECK(r.sign() >= 0);
  CHECK(r < BigInt(2) * fp.mantissa + BigInt(1));
}

TEST_CASE("pi fixed points match the canonical expansion") {
  auto fp50 = pi_fixed_point(10, 50);
  CHECK(fp50.mantissa.to_string() ==
        "314159265358979323846264338327950288419716939937510");
  CHECK(fp50.error_bound < BigRational(1));
  auto fp12 = pi_fixed_point(10, 12);
  CHECK(fp12.mantissa.to_string() == "3141592653589");
  // binary: pi = 11.0010010000...
  auto fpb2 = pi_fixed_point(2, 10);
  CHECK(fpb2.mantissa.to_string(2) == "110010010000");
  // hex spot check: pi = 3.243f6a8885a3...
  auto fp16 = pi_fixed_point(16, 12);
  CHECK(fp16.mantissa.to_string(16) == "3243f6a8885a3");
}

TEST_CASE("e fixed point") {
  auto fp = compute_fixed_point(ConstantDescriptor::make_simple(ConstantKind::e), 10, 11);
  CHECK(fp.mantissa.to_string() == "271828182845");
  CHECK(fp.error_bound < BigRational(1));
}

TEST_CASE("product fixed points stay within combined error bounds") {
  const long H = 40;
  auto p3 = compute_fixed_point(ConstantDescriptor::make_rational_times_pi(BigInt(3)), 10, H);
  auto pi = pi_fixed_point(10, H);
  // |m3/b^H - 3*mpi/b^H| <= eb3/b^H + 3*ebpi/b^H
  BigRational lhs = BigRational(p3.mantissa) - BigRational(3) * BigRational(pi.mantissa);
  if (lhs.sign() < 0) lhs = -lhs;
  CHECK(lhs <= p3.error_bound + BigRational(3) * pi.error_bound);
}

TEST_CASE("golden digits") {
  auto d = digits(ConstantDescriptor::make_simple(ConstantKind::golden_minus_one), 10, 10);
  CHECK(d == dv({6, 1, 8, 0, 3, 3, 9, 8, 8, 7}));
  auto g = digits(ConstantDescriptor::make_simple(ConstantKind::golden), 10, 11);
  CHECK(g == dv({1, 6, 1, 8, 0, 3, 3, 9, 8, 8, 7}));
}

TEST_CASE("golden equals golden-1 shifted by its leading 1") {
  auto a = digits(ConstantDescriptor::make_simple(ConstantKind::golden), 10, 61);
  auto b = digits(ConstantDescriptor::make_simple(ConstantKind::golden_minus_one), 10, 60);
  CHECK(std::vector<int>(a.begin() + 1, a.end()) == b);
}

TEST_CASE("terminating rational pads with zeros") {
  auto d = digits(ConstantDescriptor::make_rational(BigInt(1), BigInt(1)), 10, 5);
  CHECK(d == dv({1, 0, 0, 0, 0}));
  auto t = digits(ConstantDescriptor::make_rational(BigInt(1), BigInt(1000)), 10, 4);
  CHECK(t == dv({1, 0, 0, 0}));  // 0.001 -> first significant digit is the 1
}

TEST_CASE("repeating rational digits") {
  auto d = digits(ConstantDescriptor::make_rational(BigInt(1), BigInt(7)), 10, 12);
  CHECK(d == dv({1, 4, 2, 8, 5, 7, 1, 4, 2, 8, 5, 7}));
  auto third = digits(ConstantDescriptor::make_rational(BigInt(1), BigInt(3)), 10, 5);
  CHECK(third == dv({3, 3, 3, 3, 3}));
}

TEST_CASE("two pi starts 6 2 8") {
  auto d = digits(ConstantDescriptor::make_rational_times_pi(BigInt(2)), 10, 3);
  CHECK(d == dv({6, 2, 8}));
}

TEST_CASE("pi times sqrt") {
  // pi*sqrt(2) = 4.442882938158366...
  auto d = digits(ConstantDescriptor::make_pi_times_sqrt(2), 10, 16);
  CHECK(digit_str(d) == "4442882938158366");
  // pi*sqrt(1) == pi
  auto p = digits(ConstantDescriptor::make_pi_times_sqrt(1), 10, 6);
  CHECK(p == dv({3, 1, 4, 1, 5, 9}));
}

TEST_CASE("champernowne digits") {
  auto d = champernowne_digits(10, 16);
  CHECK(d == dv({1, 2, 3, 4, 5, 6, 7, 8, 9, 1, 0, 1, 1, 1, 2, 1}));
  auto b2 = champernowne_digits(2, 8);
  CHECK(b2 == dv({1, 1, 0, 1, 1, 1, 0, 0}));
  // stream form matches the free function
  auto s = digits(ConstantDescriptor::make_simple(ConstantKind::champernowne), 10, 16);
  CHECK(s == d);
}

TEST_CASE("champernowne positional digits agree with concatenation") {
  for (long b : {2L, 10L}) {
    auto naive = champernowne_digits(b, 100000);
    for (long i = 1; i <= 100000; i += (i < 100 ? 1 : 997))
      CHECK(champernowne_digit_at(b, BigInt(i)) == naive[static_cast<size_t>(i - 1)]);
    CHECK(champernowne_digit_at(b, BigInt(100000)) == naive[99999]);
  }
}

TEST_CASE("perfect squares reduce to terminating rationals") {
  auto d = digits(ConstantDescriptor::make_sqrt(144), 10, 4);
  CHECK(d == dv({1, 2, 0, 0}));
  ConstantDescriptor c = ConstantDescriptor::make_sqrt(144);
  CHECK(c.kind == ConstantKind::rational);
  DigitStream s(c, 10);
  CHECK(s.next() == 1);
  CHECK(s.next() == 2);
  CHECK(s.tail_is_zero());
}

TEST_CASE("sqrt(2) digits") {
  auto d = digits(ConstantDescriptor::make_sqrt(2), 10, 11);
  CHECK(digit_str(d) == "14142135623");
}

TEST_CASE("escalation stability") {
  // a stream started with a tiny precision hint must produce the same 2000
  // digits as one started with a comfortable one
  for (const char* spec : {"pi", "golden-1", "sqrt 2", "e", "7*pi", "pi*sqrt 3"}) {
    ConstantDescriptor c = parse_constant(spec);
    DigitStream low(c, 10, 16);
    DigitStream high(c, 10, 2100);
    for (int i = 0; i < 2000; ++i) {
      INFO(spec << " digit " << i);
      CHECK(low.next() == high.next());
    }
  }
}

TEST_CASE("streams track positions and integer digits") {
  DigitStream s(parse_constant("pi"), 10);
  CHECK(s.integer_digit_count() == 1);
  CHECK(s.next() == 3);
  CHECK(s.emitted() == 1);
  DigitStream b2(parse_constant("pi"), 2);
  CHECK(b2.integer_digit_count() == 2);  // 11.0010...
  DigitStream g(parse_constant("golden-1"), 10);
  CHECK(g.integer_digit_count() == 0);
  DigitStream r(parse_constant("rational 250/10"), 10);
  CHECK(r.integer_digit_count() == 2);
  CHECK(r.next() == 2);
  CHECK(r.next() == 5);
  CHECK(r.tail_is_zero());
}

TEST_CASE("zero constant") {
  DigitStream z(parse_constant("rational 0/5"), 10);
  CHECK(z.tail_is_zero());
  CHECK(z.next() == 0);
  CHECK(z.integer_digit_count() == 0);
}

TEST_CASE("constant grammar") {
  CHECK(parse_constant("pi").kind == ConstantKind::pi);
  CHECK(parse_constant("e").kind == ConstantKind::e);
  CHECK(parse_constant("golden").kind == ConstantKind::golden);
  CHECK(parse_constant("golden-1").kind == ConstantKind::golden_minus_one);
  CHECK(parse_constant("champernowne").kind == ConstantKind::champernowne);
  CHECK(parse_constant("sqrt 2").kind == ConstantKind::sqrt);
  CHECK(parse_constant("sqrt 2").m == 2);
  CHECK(parse_constant("rational 22/7").p == BigInt(22));
  CHECK(parse_constant("rational 22/7").q == BigInt(7));
  CHECK(parse_constant("pi*sqrt 10").m == 10);
  CHECK(parse_constant("pi*sqrt 10").kind == ConstantKind::pi_times_sqrt);
  CHECK(parse_constant("31*pi").kind == ConstantKind::rational_times_pi);
  CHECK(parse_constant("31*pi").p == BigInt(31));
  CHECK(parse_constant("file /tmp/x.txt").path == "/tmp/x.txt");
  CHECK_THROWS_AS(parse_constant("tau"), std::invalid_argument);
  CHECK_THROWS_AS(parse_constant("sqrt"), std::invalid_argument);
  CHECK_THROWS_AS(parse_constant("rational 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_constant("*pi"), std::invalid_argument);
  CHECK_THROWS_AS(parse_constant("rational -1/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_constant("pi extra"), std::invalid_argument);
  // round-trip
  for (const char* t : {"pi", "golden-1", "sqrt 7", "rational 22/7", "pi*sqrt 3", "31*pi"})
    CHECK(to_string(parse_constant(t)) == t);
}

TEST_CASE("digit files") {
  const char* path = "test_digit_stream_tmp.txt";
  {
    std::ofstream out(path);
    out << " 3.14 159\n";
  }
  CHECK(parse_digit_file(path, 10) == BigRational(314159, 100000));
  auto d = digits(ConstantDescriptor::make_file(path), 10, 8);
  CHECK(d == dv({3, 1, 4, 1, 5, 9, 0, 0}));
  DigitStream s(ConstantDescriptor::make_file(path), 10);
  for (int i = 0; i < 6; ++i) s.next();
  CHECK(s.tail_is_zero());
  {
    std::ofstream out(path);
    out << "0.001\n";
  }
  auto t = digits(ConstantDescriptor::make_file(path), 10, 3);
  CHECK(t == dv({1, 0, 0}));
  {
    std::ofstream out(path);
    out << "12x3\n";
  }
  CHECK_THROWS_AS(parse_digit_file(path, 10), std::invalid_argument);
  {
    std::ofstream out(path);
    out << "102\n";
  }
  CHECK_THROWS_AS(parse_digit_file(path, 2), std::invalid_argument);
  std::remove(path);
}

TEST_CASE("rational round-trip") {
  // digits of p/q reassembled converge to p/q
  ConstantDescriptor c = ConstantDescriptor::make_rational(BigInt(22), BigInt(7));
  DigitStream s(c, 10);
  long intd = s.integer_digit_count();
  BigRational acc(0);
  const long count = 30;
  for (long i = 0; i < count; ++i)
    acc += BigRational(s.next()) * BigRational(10).pow(intd - 1 - i);
  BigRational err = BigRational(22, 7) - acc;
  if (err.sign() < 0) err = -err;
  CHECK(err < BigRational(10).pow(intd - count));
}
