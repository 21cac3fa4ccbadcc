#include "rbmono/operator.hpp"

#include <string>

#include "rbmono/errors.hpp"

namespace rbmono {

bool WeightZeroParams::is_zero() const {
  for (const auto& bi : b)
    if (!bi.is_zero()) return false;
  return true;
}

void WeightZeroParams::validate() const {
  constexpr Exp kMagnitudeCap = 1'000'000'000;  // keeps shift arithmetic exact
  if (d == 0) throw InvalidParams("modulus d must be positive");
  if (d > kMagnitudeCap) throw InvalidParams("modulus d too large");
  if (c.size() != d || b.size() != d)
    throw InvalidParams("parameter lists must both have length d=" +
                        std::to_string(d));
  for (Exp i = 0; i < d; ++i) {
    if (c[i] > kMagnitudeCap)
      throw InvalidParams("c[" + std::to_string(i) + "] too large");
    if (b[i].is_zero() != (c[i] == 0))
      throw InvalidParams("b[" + std::to_string(i) + "] and c[" +
                          std::to_string(i) +
                          "] must vanish together or not at all");
  }
}

void TableRepr::validate() const {
  if (beta.empty()) throw InvalidParams("operator table must be nonempty");
  if (beta.size() != theta.size())
    throw InvalidParams("beta and theta tables differ in length");
  for (std::size_t n = 0; n < beta.size(); ++n) {
    if (beta[n].is_zero() && theta[n] != 0)
      throw InvalidParams("theta[" + std::to_string(n) +
                          "] must be 0 because beta[" + std::to_string(n) +
                          "] is 0");
  }
}

const Rational& weight_of(const NonzeroClass& cls) {
  return std::visit([](const auto& c) -> const Rational& { return c.lambda; },
                    cls);
}

void validate(const NonzeroClass& cls) {
  if (weight_of(cls).is_zero())
    throw InvalidParams("weight lambda must be nonzero");
  if (const auto* ev = std::get_if<Evaluation>(&cls); ev && ev->b.is_zero())
    throw InvalidParams("evaluation point b must be nonzero");
}

const char* class_name(const NonzeroClass& cls) {
  struct Namer {
    const char* operator()(const Evaluation&) const { return "evaluation"; }
    const char* operator()(const ScalarNegLambda&) const { return "scalar"; }
    const char* operator()(const ScalarNoConstant&) const {
      return "scalar_no_constant";
    }
    const char* operator()(const ConstantProjection&) const {
      return "constant_projection";
    }
  };
  return std::visit(Namer{}, cls);
}

MonomialOperator MonomialOperator::from_table(std::vector<Rational> beta,
                                              std::vector<Exp> theta) {
  TableRepr t{std::move(beta), std::move(theta)};
  t.validate();
  return MonomialOperator(std::move(t));
}

MonomialOperator MonomialOperator::from_weight0(WeightZeroParams params) {
  params.validate();
  return MonomialOperator(std::move(params));
}

MonomialOperator MonomialOperator::from_nonzero(NonzeroClass cls) {
  validate(cls);
  return MonomialOperator(std::move(cls));
}

namespace {

Rational nonzero_beta(const NonzeroClass& cls, Exp n) {
  struct Eval {
    Exp n;
    Rational operator()(const Evaluation& c) const {
      // (-lambda)^(1-n) b^n, exact for every n.
      return (-c.lambda).pow(1 - static_cast<std::int64_t>(n)) *
             c.b.pow(static_cast<std::int64_t>(n));
    }
    Rational operator()(const ScalarNegLambda& c) const { return -c.lambda; }
    Rational operator()(const ScalarNoConstant& c) const {
      return n == 0 ? Rational(0) : -c.lambda;
    }
    Rational operator()(const ConstantProjection& c) const {
      return n == 0 ? -c.lambda : Rational(0);
    }
  };
  return std::visit(Eval{n}, cls);
}

Exp nonzero_theta(const NonzeroClass& cls, Exp n) {
  struct Eval {
    Exp n;
    Exp operator()(const Evaluation&) const { return 0; }
    Exp operator()(const ScalarNegLambda&) const { return n; }
    Exp operator()(const ScalarNoConstant&) const { return n; }
    Exp operator()(const ConstantProjection&) const { return 0; }
  };
  return std::visit(Eval{n}, cls);
}

}  // namespace

Rational MonomialOperator::beta(Exp n) const {
  if (const auto* t = std::get_if<TableRepr>(&repr_)) {
    if (n > t->n_max()) throw DegreeExceedsTable(n);
    return t->beta[n];
  }
  if (const auto* w = std::get_if<WeightZeroParams>(&repr_)) {
    const Exp r = n % w->d;
    if (w->b[r].is_zero()) return Rational(0);
    const Exp shifted = w->c[r] * w->d + (n - r);
    return w->b[r] * Rational(BigInt(w->c[r] * w->d), BigInt(shifted));
  }
  return nonzero_beta(std::get<NonzeroClass>(repr_), n);
}

Exp MonomialOperator::theta(Exp n) const {
  if (const auto* t = std::get_if<TableRepr>(&repr_)) {
    if (n > t->n_max()) throw DegreeExceedsTable(n);
    return t->theta[n];
  }
  if (const auto* w = std::get_if<WeightZeroParams>(&repr_)) {
    const Exp r = n % w->d;
    if (w->b[r].is_zero()) return 0;
    return w->c[r] * w->d + (n - r);
  }
  return nonzero_theta(std::get<NonzeroClass>(repr_), n);
}

std::optional<Exp> MonomialOperator::table_limit() const {
  if (const auto* t = std::get_if<TableRepr>(&repr_)) return t->n_max();
  return std::nullopt;
}

bool MonomialOperator::defined_at(Exp n) const {
  const auto limit = table_limit();
  return !limit || n <= *limit;
}

Poly MonomialOperator::apply(const Poly& p) const {
  Poly out;
  for (const auto& [n, a] : p.terms()) {
    const Rational bn = beta(n);
    if (bn.is_zero()) continue;
    out.add_term(theta(n), a * bn);
  }
  return out;
}

std::vector<Exp> MonomialOperator::support(Exp n_bound) const {
  std::vector<Exp> s;
  for (Exp n = 0; n <= n_bound; ++n)
    if (!beta(n).is_zero()) s.push_back(n);
  return s;
}

std::vector<Exp> MonomialOperator::zero_set(Exp n_bound) const {
  std::vector<Exp> z;
  for (Exp n = 0; n <= n_bound; ++n)
    if (beta(n).is_zero()) z.push_back(n);
  return z;
}

bool MonomialOperator::is_degenerate(Exp n_bound) const {
  for (Exp n = 0; n <= n_bound; ++n)
    if (beta(n).is_zero()) return true;
  return false;
}

MonomialOperator MonomialOperator::tabulate(Exp n_max) const {
  std::vector<Rational> b;
  std::vector<Exp> t;
  b.reserve(n_max + 1);
  t.reserve(n_max + 1);
  for (Exp n = 0; n <= n_max; ++n) {
    b.push_back(beta(n));
    t.push_back(theta(n));
  }
  return from_table(std::move(b), std::move(t));
}

const TableRepr* MonomialOperator::as_table() const {
  return std::get_if<TableRepr>(&repr_);
}
const WeightZeroParams* MonomialOperator::as_weight0() const {
  return std::get_if<WeightZeroParams>(&repr_);
}
const NonzeroClass* MonomialOperator::as_nonzero() const {
  return std::get_if<NonzeroClass>(&repr_);
}

}  // namespace rbmono
