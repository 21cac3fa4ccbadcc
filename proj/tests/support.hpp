// Shared generators and independent oracles. The oracles never go through
// the code paths they are used to check: integration and evaluation are
// computed from first principles, semigroup membership by brute-force
// enumeration, rational arithmetic by big-integer cross multiplication, and
// Rota-Baxter defects by expanding the four monomial terms directly from raw
// table data.
#pragma once

#include <map>
#include <random>
#include <vector>

#include "rbmono/operator.hpp"

namespace rbmono::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int num_range = 9,
                                int den_range = 9) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_range);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

inline Rational random_nonzero_rational(Rng& rng, int num_range = 9,
                                        int den_range = 9) {
  for (;;) {
    Rational r = random_rational(rng, num_range, den_range);
    if (!r.is_zero()) return r;
  }
}

inline Poly random_poly(Rng& rng, Exp max_degree = 12, int max_terms = 6) {
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<Exp> exponent(0, max_degree);
  Poly p;
  const int k = terms(rng);
  for (int i = 0; i < k; ++i) p.add_term(exponent(rng), random_rational(rng));
  return p;
}

inline WeightZeroParams random_weight0_params(Rng& rng, Exp max_d = 6,
                                              Exp max_c = 4) {
  std::uniform_int_distribution<Exp> pick_d(1, max_d);
  std::uniform_int_distribution<Exp> pick_c(1, max_c);
  std::uniform_int_distribution<int> coin(0, 3);
  WeightZeroParams p;
  p.d = pick_d(rng);
  p.c.assign(p.d, 0);
  p.b.assign(p.d, Rational(0));
  for (Exp i = 0; i < p.d; ++i) {
    if (coin(rng) == 0) continue;  // leave this residue empty
    p.c[i] = pick_c(rng);
    p.b[i] = random_nonzero_rational(rng);
  }
  return p;
}

// Oracle: coefficientwise antiderivative with zero constant term, i.e. the
// image of p under the standard integration operator.
inline Poly integrate(const Poly& p) {
  Poly out;
  for (const auto& [n, c] : p.terms())
    out.add_term(n + 1, c * Rational(BigInt(1), BigInt(n + 1)));
  return out;
}

// Oracle: evaluate p at the point x.
inline Rational eval_at(const Poly& p, const Rational& x) {
  Rational acc(0);
  for (const auto& [n, c] : p.terms())
    acc += c * x.pow(static_cast<std::int64_t>(n));
  return acc;
}

// Oracle: v lies in the monoid generated by a and b iff v = i*a + j*b for
// some naturals i, j -- a direct representation test.
inline bool brute_member_pair(Exp v, Exp a, Exp b) {
  for (Exp i = 0; i * a <= v; ++i)
    if ((v - i * a) % b == 0) return true;
  return false;
}

// Oracle: one Rota-Baxter instance expanded termwise from raw table data,
// bypassing Poly arithmetic and MonomialOperator::apply entirely.
inline std::map<Exp, Rational> defect_by_hand(
    const std::vector<Rational>& beta, const std::vector<Exp>& theta,
    const Rational& lambda, Exp m, Exp n) {
  std::map<Exp, Rational> acc;
  const auto put = [&](Exp e, const Rational& c) {
    if (c.is_zero()) return;
    acc[e] += c;
    if (acc[e].is_zero()) acc.erase(e);
  };
  put(theta[m] + theta[n], beta[m] * beta[n]);
  if (!beta[n].is_zero()) {
    const Exp k = m + theta[n];
    put(theta[k], -(beta[n] * beta[k]));
  }
  if (!beta[m].is_zero()) {
    const Exp k = theta[m] + n;
    put(theta[k], -(beta[m] * beta[k]));
  }
  put(theta[m + n], -(lambda * beta[m + n]));
  return acc;
}

inline bool poly_matches(const Poly& p, const std::map<Exp, Rational>& terms) {
  return p.terms() == terms;
}

}  // namespace rbmono::testing
