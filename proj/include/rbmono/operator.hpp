#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "rbmono/poly.hpp"

namespace rbmono {

// Classification data of a weight-zero monomial operator: a modulus d,
// per-residue exponent multipliers c_i and leading coefficients b_i.
// The operator they define sends x^n (with residue r = n mod d) to
//   0                                   if b_r = 0,
//   b_r*c_r*d/(c_r*d + n - r) * x^(c_r*d + n - r)   otherwise.
struct WeightZeroParams {
  Exp d = 1;
  std::vector<Exp> c;
  std::vector<Rational> b;

  static WeightZeroParams zero() { return {1, {0}, {Rational(0)}}; }

  bool is_zero() const;
  void validate() const;  // throws InvalidParams

  friend bool operator==(const WeightZeroParams&,
                         const WeightZeroParams&) = default;
};

// Finite table of (beta, theta) values on exponents 0..n_max.
// Invariant: beta[n] == 0 implies theta[n] == 0.
struct TableRepr {
  std::vector<Rational> beta;
  std::vector<Exp> theta;

  Exp n_max() const { return static_cast<Exp>(beta.size()) - 1; }
  void validate() const;  // throws InvalidParams, names the offending index
};

// The four weight-nonzero classes. lambda != 0 everywhere; b != 0 in
// Evaluation.
struct Evaluation {  // x^n -> (-lambda)^(1-n) b^n; at lambda=-1 this is f -> f(b)
  Rational lambda;
  Rational b;
};
struct ScalarNegLambda {  // x^n -> -lambda x^n
  Rational lambda;
};
struct ScalarNoConstant {  // 1 -> 0, x^n -> -lambda x^n for n >= 1
  Rational lambda;
};
struct ConstantProjection {  // 1 -> -lambda, x^n -> 0 for n >= 1
  Rational lambda;
};

using NonzeroClass = std::variant<Evaluation, ScalarNegLambda,
                                  ScalarNoConstant, ConstantProjection>;

const Rational& weight_of(const NonzeroClass& cls);
void validate(const NonzeroClass& cls);  // throws InvalidParams
const char* class_name(const NonzeroClass& cls);

// A monomial linear operator P(x^n) = beta(n) x^theta(n) on Q[x], in one of
// three interchangeable representations. Tables are partial (defined up to
// n_max); the closed forms are total. Immutable after construction.
class MonomialOperator {
 public:
  static MonomialOperator from_table(std::vector<Rational> beta,
                                     std::vector<Exp> theta);
  static MonomialOperator from_weight0(WeightZeroParams params);
  static MonomialOperator from_nonzero(NonzeroClass cls);

  Rational beta(Exp n) const;  // throws DegreeExceedsTable past a table's end
  Exp theta(Exp n) const;

  // n_max for tables, nullopt for total closed forms.
  std::optional<Exp> table_limit() const;
  bool defined_at(Exp n) const;

  // Linear extension: distinct exponents may collide on theta(n) and are
  // summed.
  Poly apply(const Poly& p) const;

  std::vector<Exp> support(Exp n_bound) const;   // n with beta(n) != 0
  std::vector<Exp> zero_set(Exp n_bound) const;  // n with beta(n) == 0
  bool is_degenerate(Exp n_bound) const;

  // Sample into a table on [0, n_max].
  MonomialOperator tabulate(Exp n_max) const;

  const TableRepr* as_table() const;
  const WeightZeroParams* as_weight0() const;
  const NonzeroClass* as_nonzero() const;

 private:
  explicit MonomialOperator(
      std::variant<TableRepr, WeightZeroParams, NonzeroClass> repr)
      : repr_(std::move(repr)) {}

  std::variant<TableRepr, WeightZeroParams, NonzeroClass> repr_;
};

}  // namespace rbmono
