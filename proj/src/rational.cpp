#include "rbmono/rational.hpp"

#include <ostream>

namespace rbmono {

Rational::Rational(BigInt num, BigInt den)
    : num_(std::move(num)), den_(std::move(den)) {
  reduce();
}

void Rational::reduce() {
  if (den_ == 0) throw Error("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  num_ /= g;
  den_ /= g;
}

namespace {

// Scans [i, end) for an optionally signed decimal integer.
BigInt scan_integer(std::string_view s, std::size_t& i) {
  std::size_t start = i;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i >= s.size() || s[i] < '0' || s[i] > '9')
    throw ParseError("expected digits", i);
  std::size_t digits_begin = i;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  BigInt v(std::string(s.substr(digits_begin, i - digits_begin)));
  (void)start;
  return neg ? BigInt(-v) : v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::size_t i = 0;
  BigInt num = scan_integer(text, i);
  if (i < text.size() && text[i] == '/') {
    ++i;
    std::size_t den_pos = i;
    BigInt den = scan_integer(text, i);
    if (i != text.size()) throw ParseError("trailing characters", i);
    if (den == 0) throw ParseError("zero denominator", den_pos);
    return Rational(std::move(num), std::move(den));
  }
  if (i != text.size()) throw ParseError("trailing characters", i);
  return Rational(std::move(num));
}

Rational Rational::pow(std::int64_t e) const {
  if (e == 0) return Rational(1);
  if (e > 1'000'000'000 || e < -1'000'000'000)
    throw Error("exponent magnitude too large");
  if (e < 0) {
    if (is_zero()) throw Error("zero raised to a negative power");
    Rational inv(den_, num_);
    return inv.pow(-e);
  }
  Rational r;
  r.num_ = boost::multiprecision::pow(num_, static_cast<unsigned>(e));
  r.den_ = boost::multiprecision::pow(den_, static_cast<unsigned>(e));
  // num_/den_ coprime implies the powers are coprime as well.
  return r;
}

std::string Rational::str() const {
  std::string out = num_.str();
  if (den_ != 1) out += "/" + den_.str();
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
  return os << x.str();
}

}  // namespace rbmono
