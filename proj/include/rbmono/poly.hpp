#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "rbmono/rational.hpp"

namespace rbmono {

// Monomial exponent.
using Exp = std::uint64_t;

// Sparse univariate polynomial over Rational. Zero coefficients are never
// stored; the zero polynomial is the empty term map and has no degree.
class Poly {
 public:
  Poly() = default;

  static Poly constant(Rational c);
  static Poly monomial(Exp n, Rational c);

  // Grammar: sum of terms `[rational][*][x[^natural]]`, rationals as `p` or
  // `p/q`, whitespace ignored, `-`/`+` as signs. Throws ParseError.
  static Poly parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  std::optional<Exp> degree() const;  // nullopt for the zero polynomial
  Rational coeff(Exp n) const;
  const std::map<Exp, Rational>& terms() const { return terms_; }

  Poly& add_term(Exp n, const Rational& c);

  Poly& operator+=(const Poly& b);
  Poly& operator-=(const Poly& b);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& p);

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Canonical form: descending exponents, "x^1" as "x", "x^0" omitted,
  // unit coefficients folded into the sign.
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const Poly& p);

 private:
  std::map<Exp, Rational> terms_;
};

}  // namespace rbmono
