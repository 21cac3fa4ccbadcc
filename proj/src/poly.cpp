#include "rbmono/poly.hpp"

#include <limits>
#include <ostream>

namespace rbmono {

Poly Poly::constant(Rational c) { return monomial(0, std::move(c)); }

Poly Poly::monomial(Exp n, Rational c) {
  Poly p;
  p.add_term(n, c);
  return p;
}

std::optional<Exp> Poly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

Rational Poly::coeff(Exp n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? Rational(0) : it->second;
}

Poly& Poly::add_term(Exp n, const Rational& c) {
  if (c.is_zero()) return *this;
  auto [it, inserted] = terms_.emplace(n, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

Poly& Poly::operator+=(const Poly& b) {
  for (const auto& [n, c] : b.terms_) add_term(n, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& b) {
  for (const auto& [n, c] : b.terms_) add_term(n, -c);
  return *this;
}

Poly operator-(const Poly& a) {
  Poly r;
  for (const auto& [n, c] : a.terms_) r.terms_.emplace(n, -c);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [na, ca] : a.terms_)
    for (const auto& [nb, cb] : b.terms_) r.add_term(na + nb, ca * cb);
  return r;
}

Poly operator*(const Rational& c, const Poly& p) {
  Poly r;
  if (c.is_zero()) return r;
  for (const auto& [n, pc] : p.terms_) r.terms_.emplace(n, c * pc);
  return r;
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }
  bool eof() const { return i >= s.size(); }
  char peek() const { return s[i]; }
  bool is_digit() const { return !eof() && s[i] >= '0' && s[i] <= '9'; }

  BigInt scan_natural() {
    if (!is_digit()) throw ParseError("expected digits", i);
    std::size_t begin = i;
    while (is_digit()) ++i;
    return BigInt(std::string(s.substr(begin, i - begin)));
  }

  Exp scan_exponent() {
    std::size_t begin = i;
    BigInt v = scan_natural();
    if (v > std::numeric_limits<Exp>::max() / 2)
      throw ParseError("exponent too large", begin);
    return static_cast<Exp>(v);
  }
};

}  // namespace

Poly Poly::parse(std::string_view text) {
  Poly out;
  Cursor c{text};
  c.skip_ws();
  if (c.eof()) throw ParseError("empty polynomial", 0);
  while (true) {
    // Sign prefix; consecutive signs compose.
    int sign = 1;
    while (!c.eof() && (c.peek() == '+' || c.peek() == '-')) {
      if (c.peek() == '-') sign = -sign;
      ++c.i;
      c.skip_ws();
    }
    // One term: coefficient, x-part, or both.
    Rational coeff(1);
    bool has_coeff = false;
    if (c.is_digit()) {
      BigInt num = c.scan_natural();
      c.skip_ws();
      if (!c.eof() && c.peek() == '/') {
        ++c.i;
        c.skip_ws();
        std::size_t den_pos = c.i;
        BigInt den = c.scan_natural();
        if (den == 0) throw ParseError("zero denominator", den_pos);
        coeff = Rational(std::move(num), std::move(den));
      } else {
        coeff = Rational(std::move(num));
      }
      has_coeff = true;
      c.skip_ws();
      if (!c.eof() && c.peek() == '*') {
        ++c.i;
        c.skip_ws();
        if (c.eof() || c.peek() != 'x')
          throw ParseError("expected 'x' after '*'", c.i);
      }
    }
    Exp exp = 0;
    if (!c.eof() && c.peek() == 'x') {
      ++c.i;
      c.skip_ws();
      if (!c.eof() && c.peek() == '^') {
        ++c.i;
        c.skip_ws();
        exp = c.scan_exponent();
      } else {
        exp = 1;
      }
    } else if (!has_coeff) {
      throw ParseError("expected a term", c.i);
    }
    out.add_term(exp, sign == 1 ? coeff : -coeff);
    c.skip_ws();
    if (c.eof()) break;
    if (c.peek() != '+' && c.peek() != '-')
      throw ParseError("expected '+' or '-'", c.i);
  }
  return out;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Exp e = it->first;
    const Rational& c = it->second;
    const bool neg = c.sign() < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const Rational mag = neg ? -c : c;
    if (e == 0) {
      out += mag.str();
    } else {
      if (mag != Rational(1)) out += mag.str();
      out += "x";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  return os << p.str();
}

}  // namespace rbmono
