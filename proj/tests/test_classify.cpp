#include "rbmono/classify.hpp"

#include "doctest.h"
#include "support.hpp"

using namespace rbmono;
using rbmono::testing::Rng;

namespace {

const Rational kThird(BigInt(1), BigInt(3));

WeightZeroParams integration_params() { return {1, {1}, {Rational(1)}}; }

MonomialOperator sample(const MonomialOperator& op, Exp n) {
  return op.tabulate(n);
}

}  // namespace

TEST_CASE("construct_weight0 realizes the closed form") {
  const auto op = construct_weight0(integration_params());
  for (Exp n = 0; n <= 12; ++n) {
    CHECK(op.beta(n) == Rational(BigInt(1), BigInt(n + 1)));
    CHECK(op.theta(n) == n + 1);
  }

  const auto zero = construct_weight0({1, {0}, {Rational(0)}});
  for (Exp n = 0; n <= 12; ++n) CHECK(zero.beta(n) == Rational(0));

  const auto op2 = construct_weight0({2, {1, 0}, {kThird, Rational(0)}});
  CHECK(op2.beta(0) == kThird);
  CHECK(op2.theta(0) == 2);
  CHECK(op2.beta(4) == Rational(BigInt(1), BigInt(9)));
  CHECK(op2.theta(4) == 6);
  CHECK(op2.beta(1) == Rational(0));
  CHECK(op2.beta(7) == Rational(0));
  CHECK(check_rb(op2, Rational(0), 40).pass());
}

TEST_CASE("construct_nonzero realizes the closed forms") {
  const auto eval = construct_nonzero(Evaluation{Rational(-1), Rational(2)});
  for (Exp n = 0; n <= 8; ++n) {
    CHECK(eval.beta(n) == Rational(2).pow(static_cast<std::int64_t>(n)));
    CHECK(eval.theta(n) == 0);
  }

  // b = -lambda collapses every coefficient to -lambda.
  const auto flat = construct_nonzero(Evaluation{Rational(7), Rational(-7)});
  for (Exp n = 0; n <= 8; ++n) CHECK(flat.beta(n) == Rational(-7));

  // Weight -1 scalar class is the identity operator.
  const auto ident = construct_nonzero(ScalarNegLambda{Rational(-1)});
  Rng rng(8);
  for (int i = 0; i < 20; ++i) {
    const Poly p = testing::random_poly(rng);
    CHECK(ident.apply(p) == p);
  }
}

TEST_CASE("classify_weight0 round-trips the integration operator") {
  const auto result =
      classify_weight0(sample(construct_weight0(integration_params()), 20), 20);
  REQUIRE(std::holds_alternative<Weight0Result>(result));
  CHECK(std::get<Weight0Result>(result).params == integration_params());
}

TEST_CASE("classify_weight0 round-trips a modulus-2 operator") {
  const WeightZeroParams params{2, {1, 0}, {kThird, Rational(0)}};
  const auto result = classify_weight0(sample(construct_weight0(params), 30), 30);
  REQUIRE(std::holds_alternative<Weight0Result>(result));
  CHECK(std::get<Weight0Result>(result).params == params);
}

TEST_CASE("classify_weight0 canonicalizes the zero table") {
  const auto zero = construct_weight0(WeightZeroParams::zero());
  const auto result = classify_weight0(sample(zero, 10), 10);
  REQUIRE(std::holds_alternative<Weight0Result>(result));
  CHECK(std::get<Weight0Result>(result).params == WeightZeroParams::zero());
}

TEST_CASE("classify_weight0 refutes a corrupted table with a witness") {
  auto table = construct_weight0(integration_params()).tabulate(20);
  auto beta = table.as_table()->beta;
  auto theta = table.as_table()->theta;
  beta[5] = Rational(7);
  const auto mutated = MonomialOperator::from_table(beta, theta);
  const auto result = classify_weight0(mutated, 20);
  REQUIRE(std::holds_alternative<NotRotaBaxter>(result));
  const auto& bad = std::get<NotRotaBaxter>(result);
  const auto by_hand =
      testing::defect_by_hand(beta, theta, Rational(0), bad.m, bad.n);
  CHECK_FALSE(by_hand.empty());
  CHECK(testing::poly_matches(bad.defect, by_hand));
}

TEST_CASE("classify_weight0 refutes a flat table before decomposition") {
  // Nonzero values with zero shifts already break the instance at (0,0).
  const auto flat =
      MonomialOperator::from_table({Rational(1), Rational(1)}, {0, 0});
  const auto result = classify_weight0(flat, 1);
  CHECK(std::holds_alternative<NotRotaBaxter>(result));
}

TEST_CASE("classify_weight0 round-trip over random parameters") {
  Rng rng(987654321);
  int tested = 0;
  while (tested < 60) {
    const WeightZeroParams params = testing::random_weight0_params(rng);
    ++tested;
    const Exp n_bound = std::max<Exp>(5 * params.d, 10);
    const auto table = sample(construct_weight0(params), n_bound);
    const auto result = classify_weight0(table, n_bound);
    REQUIRE(std::holds_alternative<Weight0Result>(result));
    const auto& recovered = std::get<Weight0Result>(result).params;
    if (params.is_zero())
      CHECK(recovered == WeightZeroParams::zero());
    else
      CHECK(recovered == params);
  }
}

TEST_CASE("classify_nonzero round-trips the four classes") {
  const std::vector<Rational> lambdas = {
      Rational(1), Rational(-1), Rational(3), Rational(BigInt(-2), BigInt(5))};
  for (const Rational& lambda : lambdas) {
    std::vector<NonzeroClass> classes = {
        Evaluation{lambda, Rational(2)},
        Evaluation{lambda, -lambda},
        Evaluation{lambda, Rational(BigInt(1), BigInt(7))},
        ScalarNegLambda{lambda},
        ScalarNoConstant{lambda},
        ConstantProjection{lambda},
    };
    for (const auto& cls : classes) {
      const auto table = sample(construct_nonzero(cls), 10);
      const auto result = classify_nonzero(table, lambda, 10);
      REQUIRE(std::holds_alternative<NonzeroResult>(result));
      const auto& got = std::get<NonzeroResult>(result).cls;
      CHECK(std::string(class_name(got)) == class_name(cls));
      CHECK(weight_of(got) == lambda);
      if (const auto* ev = std::get_if<Evaluation>(&cls))
        CHECK(std::get<Evaluation>(got).b == ev->b);
    }
  }
}

TEST_CASE("classify_nonzero frozen examples") {
  const auto eva = sample(
      construct_nonzero(Evaluation{Rational(-1), Rational(2)}), 10);
  const auto r1 = classify_nonzero(eva, Rational(-1), 10);
  REQUIRE(std::holds_alternative<NonzeroResult>(r1));
  CHECK(std::get<Evaluation>(std::get<NonzeroResult>(r1).cls).b ==
        Rational(2));

  std::vector<Rational> beta(11, Rational(-5));
  std::vector<Exp> theta(11);
  for (Exp n = 0; n <= 10; ++n) theta[n] = n;
  const auto scalar = MonomialOperator::from_table(beta, theta);
  const auto r2 = classify_nonzero(scalar, Rational(5), 10);
  REQUIRE(std::holds_alternative<NonzeroResult>(r2));
  CHECK(std::holds_alternative<ScalarNegLambda>(
      std::get<NonzeroResult>(r2).cls));

  std::vector<Rational> proj_beta(11, Rational(0));
  proj_beta[0] = Rational(-1);
  const auto proj =
      MonomialOperator::from_table(proj_beta, std::vector<Exp>(11, 0));
  const auto r3 = classify_nonzero(proj, Rational(1), 10);
  REQUIRE(std::holds_alternative<NonzeroResult>(r3));
  CHECK(std::holds_alternative<ConstantProjection>(
      std::get<NonzeroResult>(r3).cls));
}

TEST_CASE("classify_nonzero needs range 2 and a nonzero weight") {
  const auto table = sample(
      construct_nonzero(ScalarNegLambda{Rational(1)}), 10);
  CHECK(std::holds_alternative<Inconclusive>(
      classify_nonzero(table, Rational(1), 1)));
  CHECK_THROWS_AS(classify_nonzero(table, Rational(0), 5), ZeroWeight);
}

TEST_CASE("classify_nonzero is inconclusive on the zero table") {
  // The zero operator satisfies the instances at every weight but is not one
  // of the four nonzero-weight classes.
  const auto zero =
      construct_weight0(WeightZeroParams::zero()).tabulate(10);
  CHECK(std::holds_alternative<Inconclusive>(
      classify_nonzero(zero, Rational(2), 10)));
}

TEST_CASE("classify_nonzero refutes a wrong-weight table") {
  const auto table = sample(
      construct_nonzero(Evaluation{Rational(-1), Rational(2)}), 10);
  const auto result = classify_nonzero(table, Rational(1), 10);
  CHECK(std::holds_alternative<NotRotaBaxter>(result));
}

TEST_CASE("the four classes stay pairwise distinct on any range >= 1") {
  for (const Rational& lambda :
       {Rational(1), Rational(-1), Rational(BigInt(3), BigInt(2))}) {
    std::vector<MonomialOperator> ops;
    ops.push_back(construct_nonzero(Evaluation{lambda, Rational(2)}));
    ops.push_back(construct_nonzero(Evaluation{lambda, -lambda}));
    ops.push_back(construct_nonzero(ScalarNegLambda{lambda}));
    ops.push_back(construct_nonzero(ScalarNoConstant{lambda}));
    ops.push_back(construct_nonzero(ConstantProjection{lambda}));
    for (std::size_t i = 0; i < ops.size(); ++i) {
      for (std::size_t j = i + 1; j < ops.size(); ++j) {
        bool differ = false;
        for (Exp n = 0; n <= 1 && !differ; ++n)
          differ = ops[i].beta(n) != ops[j].beta(n) ||
                   ops[i].theta(n) != ops[j].theta(n);
        CHECK(differ);
      }
    }
  }
}

TEST_CASE("scalar class splits into its degenerate halves") {
  Rng rng(1618);
  for (const Rational& lambda : {Rational(1), Rational(-1), Rational(3)}) {
    const auto whole = construct_nonzero(ScalarNegLambda{lambda});
    const auto no_constant = construct_nonzero(ScalarNoConstant{lambda});
    const auto projection = construct_nonzero(ConstantProjection{lambda});
    CHECK_FALSE(whole.is_degenerate(10));
    CHECK(no_constant.is_degenerate(10));
    CHECK(projection.is_degenerate(10));
    for (int i = 0; i < 30; ++i) {
      const Poly p = testing::random_poly(rng, 20);
      CHECK(no_constant.apply(p) + projection.apply(p) == whole.apply(p));
    }
  }
}

TEST_CASE("classifier verdicts imply the instances replay clean") {
  Rng rng(555);
  for (int i = 0; i < 25; ++i) {
    const WeightZeroParams params = testing::random_weight0_params(rng, 3, 3);
    const Exp n_bound = std::max<Exp>(5 * params.d, 12);
    const auto table = sample(construct_weight0(params), n_bound);
    const auto result = classify_weight0(table, n_bound);
    if (std::holds_alternative<Weight0Result>(result)) {
      CHECK(check_rb(table, Rational(0), n_bound, ExecPolicy::parallel,
                     RangePolicy::skip_out_of_range)
                .pass());
    }
  }
}
