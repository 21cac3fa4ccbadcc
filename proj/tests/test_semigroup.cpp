#include "rbmono/semigroup.hpp"

#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "support.hpp"

using namespace rbmono;
using rbmono::testing::Rng;

TEST_CASE("gcd of a set") {
  CHECK(gcd_of_set({4, 6}) == 2);
  CHECK(gcd_of_set({5}) == 5);
  CHECK(gcd_of_set({6, 10, 15}) == 1);
  CHECK_THROWS_AS(gcd_of_set({}), EmptySet);
  CHECK_THROWS_AS(gcd_of_set({0, 0}), Error);
}

TEST_CASE("closure of <3,5> matches brute-force membership") {
  // Oracle first: representation test for every n <= 15.
  std::vector<Exp> expected_gaps;
  for (Exp n = 0; n <= 15; ++n)
    if (!testing::brute_member_pair(n, 3, 5)) expected_gaps.push_back(n);
  CHECK(expected_gaps == std::vector<Exp>{1, 2, 4, 7});

  const SemigroupView view = semigroup_closure({3, 5}, 50);
  CHECK(view.gcd == 1);
  CHECK(view.certified);
  CHECK(view.gaps == std::vector<Exp>{1, 2, 4, 7});
  CHECK(view.frobenius == Exp{7});
  CHECK(view.conductor == Exp{8});
  for (Exp n = 0; n <= 50; ++n) {
    const bool member = std::find(view.elements.begin(), view.elements.end(),
                                  n) != view.elements.end();
    CHECK(member == testing::brute_member_pair(n, 3, 5));
  }
}

TEST_CASE("closure of <1> is everything") {
  const SemigroupView view = semigroup_closure({1}, 10);
  CHECK(view.gaps.empty());
  CHECK(view.conductor == Exp{0});
  CHECK_FALSE(view.frobenius.has_value());
  CHECK(view.elements.size() == 11);
}

TEST_CASE("closure of <2,3>") {
  for (Exp n = 0; n <= 6; ++n)
    CHECK(testing::brute_member_pair(n, 2, 3) == (n != 1));
  const SemigroupView view = semigroup_closure({2, 3}, 20);
  CHECK(view.gaps == std::vector<Exp>{1});
  CHECK(view.frobenius == Exp{1});
  CHECK(view.conductor == Exp{2});
}

TEST_CASE("gap count of coprime pairs is (a-1)(b-1)/2") {
  for (Exp a = 2; a < 9; ++a) {
    for (Exp b = a + 1; b <= 9; ++b) {
      if (std::gcd(a, b) != 1) continue;
      std::size_t brute_gaps = 0;
      for (Exp n = 0; n <= a * b; ++n)
        if (!testing::brute_member_pair(n, a, b)) ++brute_gaps;
      CHECK(brute_gaps == (a - 1) * (b - 1) / 2);
      const SemigroupView view = semigroup_closure({a, b}, a * b + a);
      CHECK(view.certified);
      CHECK(view.gaps.size() == (a - 1) * (b - 1) / 2);
    }
  }
}

TEST_CASE("a too-small bound is reported as uncertified") {
  const SemigroupView view = semigroup_closure({3, 5}, 5);
  CHECK_FALSE(view.certified);
  CHECK_FALSE(view.conductor.has_value());
}

TEST_CASE("generators with a common factor are normalized for gap data") {
  const SemigroupView view = semigroup_closure({4, 6}, 40);
  CHECK(view.gcd == 2);
  CHECK(view.gaps == std::vector<Exp>{1});  // gaps of <2,3>
  CHECK(view.elements.front() == 0);
  CHECK(std::find(view.elements.begin(), view.elements.end(), 10) !=
        view.elements.end());
  CHECK(std::find(view.elements.begin(), view.elements.end(), 2) ==
        view.elements.end());
  CHECK_THROWS_AS(semigroup_closure({}, 10), EmptyGenerators);
  CHECK_THROWS_AS(semigroup_closure({0}, 10), EmptyGenerators);
}

TEST_CASE("support decomposition of the integration operator") {
  const auto op = MonomialOperator::from_weight0({1, {1}, {Rational(1)}});
  const SupportDecomposition dec = decompose_support(op, 20);
  CHECK(dec.d == 1);
  CHECK(dec.residues == std::vector<Exp>{0});
  CHECK(dec.verified_up_to == 20);
}

TEST_CASE("support decomposition of a modulus-2 operator") {
  const auto op = MonomialOperator::from_weight0(
      {2, {1, 0}, {Rational(BigInt(1), BigInt(3)), Rational(0)}});
  // theta on the even support is n + 2, so the observed shifts are
  // 2, 4, 6, ... with gcd 2; odd exponents never enter the support.
  const SupportDecomposition dec = decompose_support(op, 20);
  CHECK(dec.d == 2);
  CHECK(dec.residues == std::vector<Exp>{0});
}

TEST_CASE("decomposition failure modes") {
  const auto zero = MonomialOperator::from_weight0(WeightZeroParams::zero());
  CHECK_THROWS_AS(decompose_support(zero, 10), ZeroOperator);

  const auto flat = MonomialOperator::from_table(
      {Rational(1), Rational(1)}, {0, 0});
  CHECK_THROWS_AS(decompose_support(flat, 1), InsufficientData);

  // Residues 0 and 1 both hit, but exponent 2 is outside the support.
  const auto broken = MonomialOperator::from_table(
      {Rational(1), Rational(1), Rational(0)}, {2, 2, 0});
  try {
    decompose_support(broken, 2);
    FAIL("expected an inconsistent decomposition");
  } catch (const InconsistentDecomposition& e) {
    CHECK(e.counterexample == 2);
  }
}

TEST_CASE("decomposition recovers the constructing modulus and residues") {
  Rng rng(60);
  int nontrivial = 0;
  while (nontrivial < 60) {
    const WeightZeroParams params = testing::random_weight0_params(rng);
    if (params.is_zero()) continue;
    ++nontrivial;
    const auto op = MonomialOperator::from_weight0(params);
    const Exp n_bound = 3 * params.d + 5;
    const SupportDecomposition dec = decompose_support(op, n_bound);
    CHECK(dec.d == params.d);
    std::vector<Exp> expected;
    for (Exp i = 0; i < params.d; ++i)
      if (!params.b[i].is_zero()) expected.push_back(i);
    CHECK(dec.residues == expected);

    // The classes r + dN are disjoint and tile the sampled support.
    std::vector<Exp> from_classes;
    for (Exp n = 0; n <= n_bound; ++n)
      if (std::find(dec.residues.begin(), dec.residues.end(), n % dec.d) !=
          dec.residues.end())
        from_classes.push_back(n);
    CHECK(from_classes == op.support(n_bound));
  }
}
