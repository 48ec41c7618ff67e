#include "evilnum/digit_stream.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>

#include "evilnum/isqrt.hpp"

namespace evilnum::streams {

namespace {

void check_base(long b) {
  if (b < 2 || b > 36) throw std::invalid_argument("base must be in 2..36");
}

int digit_value(char ch) {
  if (ch >= '0' && ch <= '9') return ch - '0';
  if (ch >= 'a' && ch <= 'z') return ch - 'a' + 10;
  if (ch >= 'A' && ch <= 'Z') return ch - 'A' + 10;
  return -1;
}

std::vector<int> digits_of(const BigInt& v, long b) {
  std::string s = v.to_string(static_cast<int>(b));
  std::vector<int> out(s.size());
  for (size_t i = 0; i < s.size(); ++i) out[i] = digit_value(s[i]);
  return out;
}

// smallest g with b^g >= n
long ceil_log(long b, long n) {
  long g = 0;
  long p = 1;
  while (p < n) {
    p *= b;
    ++g;
    if (p > (1L << 40)) break;  // g is plenty by then
  }
  return g;
}

long guard_digits(long b, long H) { return 2 * ceil_log(b, H + 1) + 16; }

// value * b^W lies in [lo, hi)
struct Bracket {
  BigInt lo, hi;
};

// |atan(1/x) * b^W - first| <= second, by the alternating series with a
// floor-division chain; every intermediate is a nonnegative integer.
std::pair<BigInt, BigInt> atan_inv_scaled(long x, long b, long W) {
  BigInt vk = BigInt(b).pow(static_cast<unsigned long>(W)) / BigInt(x);
  const BigInt x2(x * x);
  BigInt acc(0);
  long k = 0;
  while (vk.sign() > 0) {
    BigInt term = vk / BigInt(2 * k + 1);
    if (k % 2 == 0)
      acc += term;
    else
      acc -= term;
    vk = vk / x2;
    ++k;
  }
  // each term's floor chain deviates by < 3 ulp; the alternating tail after
  // the last nonzero term is < 3 ulp as well
  return {std::move(acc), BigInt(3 * k + 8)};
}

Bracket pi_bracket_compute(long b, long W) {
  auto [a5, e5] = atan_inv_scaled(5, b, W);
  auto [a239, e239] = atan_inv_scaled(239, b, W);
  BigInt mid1 = BigInt(16) * a5 - BigInt(4) * a239;
  BigInt err1 = BigInt(16) * e5 + BigInt(4) * e239;

  auto [a3, e3] = atan_inv_scaled(3, b, W);
  auto [a7, e7] = atan_inv_scaled(7, b, W);
  BigInt mid2 = BigInt(8) * a3 + BigInt(4) * a7;
  BigInt err2 = BigInt(8) * e3 + BigInt(4) * e7;

  Bracket out;
  out.lo = std::max(mid1 - err1, mid2 - err2);
  out.hi = std::min(mid1 + err1, mid2 + err2) + BigInt(1);
  if (!(out.lo < out.hi))
    throw CertificationError("pi: the two arctan series disagree beyond their error budgets");
  return out;
}

// memoized pi bracket per base, precision only ever grows
std::mutex pi_mutex;
std::map<long, std::pair<long, Bracket>> pi_cache;  // base -> (W, bracket)

Bracket downscale(const Bracket& br, long b, long delta) {
  if (delta == 0) return br;
  BigInt f = BigInt(b).pow(static_cast<unsigned long>(delta));
  return {br.lo.fdiv(f), (br.hi - BigInt(1)).fdiv(f) + BigInt(1)};
}

Bracket pi_bracket(long b, long W) {
  std::lock_guard<std::mutex> lock(pi_mutex);
  auto it = pi_cache.find(b);
  if (it == pi_cache.end() || it->second.first < W) {
    long Wc = W;
    if (it != pi_cache.end()) Wc = std::max(W, 2 * it->second.first);
    pi_cache[b] = {Wc, pi_bracket_compute(b, Wc)};
    it = pi_cache.find(b);
  }
  return downscale(it->second.second, b, it->second.first - W);
}

Bracket e_bracket(long b, long W) {
  BigInt S = BigInt(b).pow(static_cast<unsigned long>(W));
  BigInt acc = BigInt(2) * S;
  BigInt u = S;
  long k = 2;
  long terms = 0;
  while (true) {
    u = u / BigInt(k);
    if (u.is_zero()) break;
    acc += u;
    ++k;
    ++terms;
  }
  // floors only lose value, each by < 2 ulp propagated; the factorial tail
  // once u hits zero is < 4 ulp
  return {acc, acc + BigInt(2 * terms + 7)};
}

Bracket bracket_at(const ConstantDescriptor& c, long b, long W) {
  switch (c.kind) {
    case ConstantKind::sqrt: {
      BigInt s = integer_sqrt(BigInt(c.m) * BigInt(b).pow(static_cast<unsigned long>(2 * W)));
      return {s, s + BigInt(1)};
    }
    case ConstantKind::golden:
    case ConstantKind::golden_minus_one: {
      BigInt bw = BigInt(b).pow(static_cast<unsigned long>(W));
      BigInt s = integer_sqrt(BigInt(5) * bw * bw);
      BigInt a = c.kind == ConstantKind::golden ? s + bw : s - bw;
      BigInt m = a.fdiv(BigInt(2));
      return {m, m + BigInt(1)};
    }
    case ConstantKind::pi:
      return pi_bracket(b, W);
    case ConstantKind::e:
      return e_bracket(b, W);
    case ConstantKind::rational_times_pi: {
      Bracket p = pi_bracket(b, W);
      return {c.p * p.lo, c.p * p.hi};
    }
    case ConstantKind::pi_times_sqrt: {
      Bracket p = pi_bracket(b, W);
      BigInt bw = BigInt(b).pow(static_cast<unsigned long>(W));
      BigInt s = integer_sqrt(BigInt(c.m) * bw * bw);
      // pi*sqrt(x)*b^{2W} in [p.lo*s, p.hi*(s+1)); shift back down by b^W
      return {(p.lo * s).fdiv(bw), (p.hi * (s + BigInt(1)) - BigInt(1)).fdiv(bw) + BigInt(1)};
    }
    default:
      throw std::invalid_argument("bracket_at: descriptor has an exact digit generator");
  }
}

BigRational min_one(BigRational r) {
  return r > BigRational(1) ? BigRational(1) : r;
}

// exact value of an exact-kind descriptor (rational or file)
BigRational exact_value(const ConstantDescriptor& c, long b) {
  if (c.kind == ConstantKind::file) return parse_digit_file(c.path, b);
  return BigRational(c.p, c.q);
}

FixedPointValue fixed_point_bracketed(const ConstantDescriptor& c, long b, long H) {
  long G = guard_digits(b, H);
  for (int attempt = 0; attempt < 8; ++attempt, G *= 2) {
    Bracket br = bracket_at(c, b, H + G);
    BigInt bG = BigInt(b).pow(static_cast<unsigned long>(G));
    // the combined uncertainty must stay within 2 ulp of the target scale
    if (br.hi - br.lo > BigInt(2) * bG) continue;
    BigInt m1 = br.lo.fdiv(bG);
    BigInt m2 = (br.hi - BigInt(1)).fdiv(bG);
    if (m1 == m2) {
      FixedPointValue out;
      out.scale = H;
      out.base = b;
      out.error_bound = min_one(BigRational(br.hi - m1 * bG, bG));
      out.mantissa = std::move(m1);
      return out;
    }
  }
  throw CertificationError("digit-boundary ambiguity persists after maximum escalation");
}

}  // namespace

ConstantDescriptor ConstantDescriptor::make_rational(BigInt p, BigInt q) {
  if (q.sign() <= 0) throw std::invalid_argument("rational: denominator must be >= 1");
  if (p.sign() < 0) throw std::invalid_argument("rational: negative constants not supported");
  ConstantDescriptor c;
  c.kind = ConstantKind::rational;
  c.p = std::move(p);
  c.q = std::move(q);
  return c;
}

ConstantDescriptor ConstantDescriptor::make_sqrt(long m) {
  if (m < 0) throw std::invalid_argument("sqrt: argument must be >= 0");
  ConstantDescriptor c;
  BigInt r = integer_sqrt(BigInt(m));
  if (r * r == BigInt(m)) return make_rational(r, BigInt(1));  // exact, terminating
  c.kind = ConstantKind::sqrt;
  c.m = m;
  return c;
}

ConstantDescriptor ConstantDescriptor::make_simple(ConstantKind k) {
  ConstantDescriptor c;
  c.kind = k;
  return c;
}

ConstantDescriptor ConstantDescriptor::make_pi_times_sqrt(long x) {
  if (x < 1) throw std::invalid_argument("pi*sqrt: argument must be >= 1");
  ConstantDescriptor c;
  c.kind = ConstantKind::pi_times_sqrt;
  c.m = x;
  return c;
}

ConstantDescriptor ConstantDescriptor::make_rational_times_pi(BigInt p) {
  if (p.sign() <= 0) throw std::invalid_argument("<p>*pi: factor must be >= 1");
  ConstantDescriptor c;
  c.kind = ConstantKind::rational_times_pi;
  c.p = std::move(p);
  return c;
}

ConstantDescriptor ConstantDescriptor::make_file(std::string path) {
  ConstantDescriptor c;
  c.kind = ConstantKind::file;
  c.path = std::move(path);
  return c;
}

ConstantDescriptor parse_constant(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tok;
  for (std::string t; in >> t;) tok.push_back(t);
  if (tok.empty()) throw std::invalid_argument("constant: empty specification");
  const std::string& head = tok[0];
  auto arg = [&](size_t i) -> const std::string& {
    if (i >= tok.size()) throw std::invalid_argument("constant: missing argument after " + head);
    return tok[i];
  };
  auto as_long = [](const std::string& s) {
    size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument("constant: bad integer " + s);
    return v;
  };
  auto no_more = [&](size_t n) {
    if (tok.size() > n) throw std::invalid_argument("constant: unexpected trailing tokens");
  };

  if (head == "pi") {
    no_more(1);
    return ConstantDescriptor::make_simple(ConstantKind::pi);
  }
  if (head == "e") {
    no_more(1);
    return ConstantDescriptor::make_simple(ConstantKind::e);
  }
  if (head == "golden") {
    no_more(1);
    return ConstantDescriptor::make_simple(ConstantKind::golden);
  }
  if (head == "golden-1") {
    no_more(1);
    return ConstantDescriptor::make_simple(ConstantKind::golden_minus_one);
  }
  if (head == "champernowne") {
    no_more(1);
    return ConstantDescriptor::make_simple(ConstantKind::champernowne);
  }
  if (head == "sqrt") {
    no_more(2);
    return ConstantDescriptor::make_sqrt(as_long(arg(1)));
  }
  if (head == "pi*sqrt") {
    no_more(2);
    return ConstantDescriptor::make_pi_times_sqrt(as_long(arg(1)));
  }
  if (head == "rational") {
    no_more(2);
    const std::string& pq = arg(1);
    size_t slash = pq.find('/');
    if (slash == std::string::npos)
      throw std::invalid_argument("constant: rational wants <p>/<q>");
    return ConstantDescriptor::make_rational(BigInt(pq.substr(0, slash), 10),
                                             BigInt(pq.substr(slash + 1), 10));
  }
  if (head == "file") {
    no_more(2);
    return ConstantDescriptor::make_file(arg(1));
  }
  // <p>*pi
  size_t star = head.find("*pi");
  if (star != std::string::npos && star + 3 == head.size() && star > 0) {
    no_more(1);
    return ConstantDescriptor::make_rational_times_pi(BigInt(head.substr(0, star), 10));
  }
  throw std::invalid_argument("constant: unrecognized specification '" + text + "'");
}

std::string to_string(const ConstantDescriptor& c) {
  switch (c.kind) {
    case ConstantKind::rational:
      return "rational " + c.p.to_string() + "/" + c.q.to_string();
    case ConstantKind::sqrt:
      return "sqrt " + std::to_string(c.m);
    case ConstantKind::golden_minus_one:
      return "golden-1";
    case ConstantKind::golden:
      return "golden";
    case ConstantKind::pi:
      return "pi";
    case ConstantKind::e:
      return "e";
    case ConstantKind::champernowne:
      return "champernowne";
    case ConstantKind::pi_times_sqrt:
      return "pi*sqrt " + std::to_string(c.m);
    case ConstantKind::rational_times_pi:
      return c.p.to_string() + "*pi";
    case ConstantKind::file:
      return "file " + c.path;
  }
  return "?";
}

FixedPointValue compute_fixed_point(const ConstantDescriptor& c, long b, long H) {
  check_base(b);
  if (H < 1) throw std::invalid_argument("compute_fixed_point: need H >= 1");
  switch (c.kind) {
    case ConstantKind::rational:
    case ConstantKind::file: {
      BigRational v = exact_value(c, b);
      BigInt scaled_num = v.num() * BigInt(b).pow(static_cast<unsigned long>(H));
      FixedPointValue out;
      out.mantissa = scaled_num.fdiv(v.den());
      out.scale = H;
      out.base = b;
      out.error_bound = BigRational(scaled_num - out.mantissa * v.den(), v.den());
      return out;
    }
    case ConstantKind::champernowne: {
      auto ds = champernowne_digits(b, H);
      BigInt m(0);
      for (int d : ds) m = m * BigInt(b) + BigInt(d);
      FixedPointValue out;
      out.mantissa = std::move(m);
      out.scale = H;
      out.base = b;
      out.error_bound = BigRational(1);
      return out;
    }
    case ConstantKind::sqrt: {
      BigInt N = BigInt(c.m) * BigInt(b).pow(static_cast<unsigned long>(2 * H));
      BigInt s = integer_sqrt(N);
      FixedPointValue out;
      out.scale = H;
      out.base = b;
      out.error_bound =
          s.is_zero() ? BigRational(0) : min_one(BigRational(N - s * s, BigInt(2) * s));
      out.mantissa = std::move(s);
      return out;
    }
    case ConstantKind::golden:
    case ConstantKind::golden_minus_one: {
      BigInt bw = BigInt(b).pow(static_cast<unsigned long>(H));
      BigInt N = BigInt(5) * bw * bw;
      BigInt s = integer_sqrt(N);
      BigInt a = c.kind == ConstantKind::golden ? s + bw : s - bw;
      FixedPointValue out;
      out.mantissa = a.fdiv(BigInt(2));
      out.scale = H;
      out.base = b;
      // value*b^H - mantissa = (parity + frac(sqrt))/2
      BigRational theta(N - s * s, BigInt(2) * s);
      BigRational parity(a - out.mantissa * BigInt(2));
      out.error_bound = min_one((parity + theta) / BigRational(2));
      return out;
    }
    default:
      return fixed_point_bracketed(c, b, H);
  }
}

FixedPointValue pi_fixed_point(long b, long H) {
  return compute_fixed_point(ConstantDescriptor::make_simple(ConstantKind::pi), b, H);
}

std::vector<int> champernowne_digits(long b, long count) {
  check_base(b);
  if (count < 1) throw std::invalid_argument("champernowne_digits: need count >= 1");
  std::vector<int> out;
  out.reserve(static_cast<size_t>(count));
  BigInt cur(1);
  while (static_cast<long>(out.size()) < count) {
    for (int d : digits_of(cur, b)) {
      out.push_back(d);
      if (static_cast<long>(out.size()) == count) break;
    }
    cur += BigInt(1);
  }
  return out;
}

int champernowne_digit_at(long b, const BigInt& index) {
  check_base(b);
  if (index.sign() <= 0) throw std::invalid_argument("champernowne_digit_at: index is 1-based");
  // numbers with exactly d base-b digits contribute d*(b-1)*b^{d-1} digits
  BigInt rest = index - BigInt(1);  // 0-based offset
  long d = 1;
  BigInt block_start(1);  // b^{d-1}, first d-digit number
  while (true) {
    BigInt block_digits = BigInt(d) * BigInt(b - 1) * block_start;
    if (rest < block_digits) break;
    rest -= block_digits;
    block_start *= BigInt(b);
    ++d;
  }
  BigInt number = block_start + rest / BigInt(d);
  long pos = (rest % BigInt(d)).to_long();
  return digits_of(number, b)[static_cast<size_t>(pos)];
}

DigitStream::DigitStream(ConstantDescriptor c, long base, long initial_fraction_digits,
                         int max_escalations)
    : c_(std::move(c)),
      base_(base),
      h_(std::max(initial_fraction_digits, 8L)),
      escalations_left_(max_escalations) {
  check_base(base_);
  exact_ = c_.kind == ConstantKind::rational || c_.kind == ConstantKind::file ||
           c_.kind == ConstantKind::champernowne;
}

void DigitStream::ensure_ready() {
  if (ready_) return;
  ready_ = true;
  if (c_.kind == ConstantKind::champernowne) {
    int_digits_ = 0;  // the constant is 0.123...
    return;
  }
  if (exact_) {
    BigRational v = exact_value(c_, base_);
    BigInt ip = v.num() / v.den();
    rem_ = v.num() - ip * v.den();
    den_ = v.den();
    if (ip.sign() > 0) {
      buf_ = digits_of(ip, base_);
      int_digits_ = static_cast<long>(buf_.size());
      skip_zeros_ = false;
    } else {
      int_digits_ = 0;
      skip_zeros_ = true;
    }
    if (rem_.is_zero()) terminated_ = true;
    return;
  }
  FixedPointValue fp = compute_fixed_point(c_, base_, h_);
  mantissa_ = fp.mantissa;
  digits_ = digits_of(mantissa_, base_);
  int_digits_ = std::max(0L, static_cast<long>(digits_.size()) - h_);
}

void DigitStream::refill() {
  if (c_.kind == ConstantKind::champernowne) {
    buf_ = digits_of(champ_next_, base_);
    buf_pos_ = 0;
    champ_next_ += BigInt(1);
    return;
  }
  if (exact_) {
    // long division, skipping the fraction's leading zeros for values < 1
    while (!terminated_) {
      BigInt scaled = rem_ * BigInt(base_);
      BigInt d = scaled / den_;
      rem_ = scaled - d * den_;
      if (rem_.is_zero()) terminated_ = true;
      int dv = static_cast<int>(d.to_long());
      if (skip_zeros_ && dv == 0) continue;  // terminated_ can only also hold if value is 0
      skip_zeros_ = false;
      buf_.assign(1, dv);
      buf_pos_ = 0;
      return;
    }
    return;
  }
  // fixed-point path: double the precision and re-derive the digit string
  if (escalations_left_ <= 0)
    throw CertificationError("digit stream exhausted its precision-escalation budget");
  --escalations_left_;
  long h_old = h_;
  BigInt m_old = mantissa_;
  h_ *= 2;
  FixedPointValue fp = compute_fixed_point(c_, base_, h_);
  mantissa_ = fp.mantissa;
  // nested-floor stability: the old mantissa must be a prefix of the new one
  if (mantissa_.fdiv(BigInt(base_).pow(static_cast<unsigned long>(h_ - h_old))) != m_old)
    throw CertificationError("digit stream failed prefix-stability on escalation");
  digits_ = digits_of(mantissa_, base_);
}

int DigitStream::next() {
  ensure_ready();
  ++emitted_;
  if (exact_ || c_.kind == ConstantKind::champernowne) {
    while (buf_pos_ >= buf_.size()) {
      if (terminated_) return 0;
      refill();
      if (buf_pos_ >= buf_.size() && terminated_) return 0;
    }
    return buf_[buf_pos_++];
  }
  if (pos_ >= digits_.size()) refill();
  return digits_[pos_++];
}

bool DigitStream::tail_is_zero() {
  ensure_ready();
  if (!exact_ || c_.kind == ConstantKind::champernowne) return false;
  return terminated_ && buf_pos_ >= buf_.size();
}

long DigitStream::integer_digit_count() {
  ensure_ready();
  return int_digits_;
}

std::vector<int> digits(const ConstantDescriptor& c, long b, long count) {
  if (count < 1) throw std::invalid_argument("digits: need count >= 1");
  DigitStream s(c, b, count + 8);
  std::vector<int> out;
  out.reserve(static_cast<size_t>(count));
  for (long i = 0; i < count; ++i) out.push_back(s.next());
  return out;
}

BigRational parse_digit_file(const std::string& path, long b) {
  check_base(b);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open digit file: " + path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  BigInt int_part(0), frac_num(0), frac_den(1);
  bool seen_point = false;
  bool seen_digit = false;
  for (char ch : content) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '.') {
      if (seen_point) throw std::invalid_argument("digit file: more than one point");
      seen_point = true;
      continue;
    }
    int d = digit_value(ch);
    if (d < 0 || d >= b)
      throw std::invalid_argument(std::string("digit file: invalid character '") + ch + "'");
    seen_digit = true;
    if (!seen_point) {
      int_part = int_part * BigInt(b) + BigInt(d);
    } else {
      frac_num = frac_num * BigInt(b) + BigInt(d);
      frac_den *= BigInt(b);
    }
  }
  if (!seen_digit) throw std::invalid_argument("digit file: no digits found");
  return BigRational(int_part) + BigRational(frac_num, frac_den);
}

}  // namespace evilnum::streams
