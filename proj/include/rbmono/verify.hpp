#pragma once

#include <optional>
#include <string>

#include "rbmono/operator.hpp"

namespace rbmono {

enum class Verdict { pass, fail };

// check_rb evaluates independent (m, n) instances; the parallel kernel uses
// OpenMP and reports exactly the same verdict, witness and counts as the
// serial reference.
enum class ExecPolicy { serial, parallel };

// What to do with pairs whose reachable exponents fall outside a finite
// table: refuse the whole run (strict) or skip and count them.
enum class RangePolicy { strict, skip_out_of_range };

struct RBWitness {
  Exp m = 0;
  Exp n = 0;
  Poly defect;            // nonzero by construction
  std::string condition;  // which check failed; "rb" for plain instances
};

struct RBReport {
  Verdict verdict = Verdict::pass;
  std::uint64_t checked_pairs = 0;  // instances confirmed (before the witness)
  std::uint64_t skipped_pairs = 0;  // instances out of table range
  Exp max_degree = 0;
  Rational lambda;
  std::optional<RBWitness> witness;

  bool pass() const { return verdict == Verdict::pass; }
};

// The defect of one Rota-Baxter instance at the monomial pair (x^m, x^n):
//   P(x^m)P(x^n) - P(x^m P(x^n)) - P(P(x^m) x^n) - lambda P(x^(m+n)),
// computed through apply. Zero iff the instance holds.
Poly rb_defect(const MonomialOperator& op, const Rational& lambda, Exp m,
               Exp n);

// Checks every pair m <= n <= max_degree (the equation is symmetric in the
// pair). Fail reports the lexicographically least witness regardless of
// execution policy. Strict mode throws DegreeExceedsTable up front when a
// finite table cannot cover the run, reporting the minimal size needed.
RBReport check_rb(const MonomialOperator& op, const Rational& lambda,
                  Exp max_degree, ExecPolicy exec = ExecPolicy::parallel,
                  RangePolicy range = RangePolicy::strict);

// The four equivalent weight-zero conditions: both support/zero-set shift
// containments, additivity of theta across shifts, and the beta splitting
// identity. Pairs with unreachable shifted indices are skipped and counted,
// so finite tables cannot produce false negatives.
RBReport check_weight0_conditions(const MonomialOperator& op, Exp max_degree);

// For m in the support: walks m, m+theta(m), m+2*theta(m), ... and checks
// theta(m+k*theta(m)) = (k+1)*theta(m) and beta(m+k*theta(m)) = beta(m)/(k+1)
// for 0 <= k <= k_max. Throws NotInSupport when beta(m) = 0.
bool check_scaling_chain(const MonomialOperator& op, Exp m, Exp k_max);

// Structural facts every weight-nonzero Rota-Baxter operator satisfies:
//  (1) theta(0) = 0 and theta is idempotent on its image,
//  (2) beta(theta(n)) = -lambda on the support; beta(0) in {0, -lambda},
//  (3) the zero set of theta is a subsemigroup, and equals {0} united with
//      the zero set of beta when the latter is nonempty,
//  (4) the image of theta is a subsemigroup meeting theta's zero set in {0}.
// Throws ZeroWeight when lambda = 0.
RBReport check_nonzero_structure(const MonomialOperator& op,
                                 const Rational& lambda, Exp max_degree);

}  // namespace rbmono
