#include "rbmono/verify.hpp"

#include <algorithm>
#include <atomic>
#include <utility>
#include <vector>

#include "rbmono/errors.hpp"

namespace rbmono {

Poly rb_defect(const MonomialOperator& op, const Rational& lambda, Exp m,
               Exp n) {
  const Poly xm = Poly::monomial(m, 1);
  const Poly xn = Poly::monomial(n, 1);
  const Poly pm = op.apply(xm);
  const Poly pn = op.apply(xn);
  Poly defect = pm * pn;
  defect -= op.apply(xm * pn);
  defect -= op.apply(pm * xn);
  defect -= lambda * op.apply(Poly::monomial(m + n, 1));
  return defect;
}

namespace {

// Largest exponent the instance at (m, n) queries. Assumes m, n are within
// the table (theta and beta lookups must succeed).
Exp required_index(const MonomialOperator& op, Exp m, Exp n) {
  Exp req = m + n;
  if (!op.beta(n).is_zero()) req = std::max(req, m + op.theta(n));
  if (!op.beta(m).is_zero()) req = std::max(req, op.theta(m) + n);
  return req;
}

bool pair_in_range(const MonomialOperator& op, std::optional<Exp> limit, Exp m,
                   Exp n) {
  if (!limit) return true;
  if (m > *limit || n > *limit) return false;
  return required_index(op, m, n) <= *limit;
}

// Strict runs on tables refuse up front when some pair cannot be evaluated,
// reporting the largest index the run would need (a lower bound when even
// the base exponents are missing).
void strict_precheck(const MonomialOperator& op, Exp max_degree) {
  const auto limit = op.table_limit();
  if (!limit) return;
  Exp needed = 0;
  const Exp scan = std::min(max_degree, *limit);
  for (Exp m = 0; m <= scan; ++m)
    for (Exp n = m; n <= scan; ++n)
      needed = std::max(needed, required_index(op, m, n));
  if (max_degree > *limit) needed = std::max(needed, 2 * max_degree);
  if (needed > *limit) throw DegreeExceedsTable(needed);
}

struct PairCounts {
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
};

// Counts checked/skipped pairs among the first `upto` pairs in lexicographic
// order (UINT64_MAX for all of them). Cheap: only zero tests and integer
// comparisons.
PairCounts count_pairs(const MonomialOperator& op, Exp max_degree,
                       std::uint64_t upto) {
  const auto limit = op.table_limit();
  PairCounts counts;
  std::uint64_t idx = 0;
  for (Exp m = 0; m <= max_degree; ++m) {
    for (Exp n = m; n <= max_degree; ++n, ++idx) {
      if (idx >= upto) return counts;
      if (pair_in_range(op, limit, m, n))
        ++counts.checked;
      else
        ++counts.skipped;
    }
  }
  return counts;
}

RBReport check_rb_serial(const MonomialOperator& op, const Rational& lambda,
                         Exp max_degree) {
  RBReport rep;
  rep.max_degree = max_degree;
  rep.lambda = lambda;
  const auto limit = op.table_limit();
  for (Exp m = 0; m <= max_degree; ++m) {
    for (Exp n = m; n <= max_degree; ++n) {
      if (!pair_in_range(op, limit, m, n)) {
        ++rep.skipped_pairs;
        continue;
      }
      Poly defect = rb_defect(op, lambda, m, n);
      if (!defect.is_zero()) {
        rep.verdict = Verdict::fail;
        rep.witness = RBWitness{m, n, std::move(defect), "rb"};
        return rep;
      }
      ++rep.checked_pairs;
    }
  }
  return rep;
}

#ifdef _OPENMP

RBReport check_rb_parallel(const MonomialOperator& op, const Rational& lambda,
                           Exp max_degree) {
  const auto limit = op.table_limit();
  const std::uint64_t rows = max_degree + 1;
  const std::uint64_t total = rows * (rows + 1) / 2;

  // Row offsets let a flat pair index decode in O(log rows).
  std::vector<std::uint64_t> row_start(rows + 1);
  for (std::uint64_t m = 0; m <= rows; ++m)
    row_start[m] = m * rows - m * (m - 1) / 2;
  const auto decode = [&](std::uint64_t idx) -> std::pair<Exp, Exp> {
    const auto it =
        std::upper_bound(row_start.begin(), row_start.end(), idx) - 1;
    const Exp m = static_cast<Exp>(it - row_start.begin());
    return {m, m + static_cast<Exp>(idx - *it)};
  };

  std::atomic<std::uint64_t> best{UINT64_MAX};
#pragma omp parallel for schedule(dynamic, 64)
  for (long long i = 0; i < static_cast<long long>(total); ++i) {
    const std::uint64_t idx = static_cast<std::uint64_t>(i);
    // A failure at a smaller index makes this pair irrelevant for the
    // lexicographically least witness.
    if (idx > best.load(std::memory_order_relaxed)) continue;
    const auto [m, n] = decode(idx);
    if (!pair_in_range(op, limit, m, n)) continue;
    if (!rb_defect(op, lambda, m, n).is_zero()) {
#pragma omp critical(rbmono_check_rb_best)
      {
        if (idx < best.load(std::memory_order_relaxed))
          best.store(idx, std::memory_order_relaxed);
      }
    }
  }

  RBReport rep;
  rep.max_degree = max_degree;
  rep.lambda = lambda;
  const std::uint64_t b = best.load();
  const PairCounts counts = count_pairs(op, max_degree, b);
  rep.checked_pairs = counts.checked;
  rep.skipped_pairs = counts.skipped;
  if (b != UINT64_MAX) {
    const auto [m, n] = decode(b);
    rep.verdict = Verdict::fail;
    rep.witness = RBWitness{m, n, rb_defect(op, lambda, m, n), "rb"};
  }
  return rep;
}

#endif  // _OPENMP

}  // namespace

RBReport check_rb(const MonomialOperator& op, const Rational& lambda,
                  Exp max_degree, ExecPolicy exec, RangePolicy range) {
  if (range == RangePolicy::strict) strict_precheck(op, max_degree);
#ifdef _OPENMP
  if (exec == ExecPolicy::parallel)
    return check_rb_parallel(op, lambda, max_degree);
#else
  (void)exec;
#endif
  return check_rb_serial(op, lambda, max_degree);
}

RBReport check_weight0_conditions(const MonomialOperator& op,
                                  Exp max_degree) {
  const auto limit = op.table_limit();
  if (limit && max_degree > *limit) throw DegreeExceedsTable(max_degree);

  RBReport rep;
  rep.max_degree = max_degree;
  rep.lambda = Rational(0);

  std::vector<char> in_support(max_degree + 1);
  for (Exp n = 0; n <= max_degree; ++n)
    in_support[n] = !op.beta(n).is_zero();

  const auto fail = [&](Exp m, Exp n, Poly defect,
                        const char* condition) -> RBReport& {
    rep.verdict = Verdict::fail;
    rep.witness = RBWitness{m, n, std::move(defect), condition};
    return rep;
  };

  for (Exp m = 0; m <= max_degree; ++m) {
    for (Exp n = 0; n <= max_degree; ++n) {
      bool complete = true;
      if (in_support[n]) {
        const Exp shifted = m + op.theta(n);
        if (limit && shifted > *limit) {
          complete = false;
        } else {
          const bool shifted_in_support = !op.beta(shifted).is_zero();
          if (in_support[m] && !shifted_in_support)
            return fail(m, n, Poly::monomial(shifted, 1), "support_shift");
          if (!in_support[m] && shifted_in_support)
            return fail(m, n, Poly::monomial(shifted, op.beta(shifted)),
                        "zero_set_shift");
        }
      }
      if (in_support[m] && in_support[n]) {
        const Exp tm = op.theta(m);
        const Exp tn = op.theta(n);
        const Exp left = tm + n;
        const Exp right = m + tn;
        if (limit && (left > *limit || right > *limit)) {
          complete = false;
        } else {
          if (op.theta(left) != tm + tn)
            return fail(m, n,
                        Poly::monomial(op.theta(left), 1) -
                            Poly::monomial(tm + tn, 1),
                        "theta_additivity");
          if (op.theta(right) != tm + tn)
            return fail(m, n,
                        Poly::monomial(op.theta(right), 1) -
                            Poly::monomial(tm + tn, 1),
                        "theta_additivity");
          const Rational residual = op.beta(m) * op.beta(n) -
                                    op.beta(m) * op.beta(left) -
                                    op.beta(n) * op.beta(right);
          if (!residual.is_zero())
            return fail(m, n, Poly::constant(residual), "beta_splitting");
        }
      }
      if (complete)
        ++rep.checked_pairs;
      else
        ++rep.skipped_pairs;
    }
  }
  return rep;
}

bool check_scaling_chain(const MonomialOperator& op, Exp m, Exp k_max) {
  const Rational base = op.beta(m);
  if (base.is_zero()) throw NotInSupport(m);
  const Exp step = op.theta(m);
  for (Exp k = 0; k <= k_max; ++k) {
    const Exp idx = m + k * step;
    if (op.theta(idx) != (k + 1) * step) return false;
    if (op.beta(idx) != base * Rational(BigInt(1), BigInt(k + 1)))
      return false;
  }
  return true;
}

RBReport check_nonzero_structure(const MonomialOperator& op,
                                 const Rational& lambda, Exp max_degree) {
  if (lambda.is_zero()) throw ZeroWeight();
  const auto limit = op.table_limit();
  if (limit && max_degree > *limit) throw DegreeExceedsTable(max_degree);

  RBReport rep;
  rep.max_degree = max_degree;
  rep.lambda = lambda;

  const auto fail = [&](Exp m, Exp n, Poly defect,
                        const char* condition) -> RBReport& {
    rep.verdict = Verdict::fail;
    rep.witness = RBWitness{m, n, std::move(defect), condition};
    return rep;
  };
  const auto count = [&] { ++rep.checked_pairs; };

  // (1) theta(0) = 0 and theta(theta(n)) = theta(n).
  if (op.theta(0) != 0)
    return fail(0, 0, Poly::monomial(op.theta(0), 1) - Poly::monomial(0, 1),
                "theta_fixed_zero");
  count();
  for (Exp n = 0; n <= max_degree; ++n) {
    const Exp t = op.theta(n);
    if (limit && t > *limit)
      return fail(n, t, Poly::monomial(t, 1), "theta_image_unavailable");
    if (op.theta(t) != t)
      return fail(n, t,
                  Poly::monomial(op.theta(t), 1) - Poly::monomial(t, 1),
                  "theta_idempotent");
    count();
  }

  // (2) beta(theta(n)) = -lambda on the support; beta(0) in {0, -lambda}.
  for (Exp n = 0; n <= max_degree; ++n) {
    if (op.beta(n).is_zero()) continue;
    const Exp t = op.theta(n);
    const Rational value = op.beta(t);
    if (value != -lambda)
      return fail(n, t, Poly::constant(value + lambda), "beta_on_image");
    count();
  }
  {
    const Rational b0 = op.beta(0);
    if (!b0.is_zero() && b0 != -lambda)
      return fail(0, 0, Poly::constant(b0 * (b0 + lambda)), "beta_at_zero");
    count();
  }

  // (3) the zero set of theta is a subsemigroup; with a degenerate beta it
  // equals {0} plus beta's zero set.
  std::vector<Exp> theta_zeros;
  bool beta_degenerate = false;
  for (Exp n = 0; n <= max_degree; ++n) {
    if (op.theta(n) == 0) theta_zeros.push_back(n);
    if (op.beta(n).is_zero()) beta_degenerate = true;
  }
  for (Exp a : theta_zeros) {
    for (Exp b : theta_zeros) {
      if (a > b || a + b > max_degree) continue;
      if (op.theta(a + b) != 0)
        return fail(a, b,
                    Poly::monomial(op.theta(a + b), 1) - Poly::monomial(0, 1),
                    "zero_theta_semigroup");
      count();
    }
  }
  if (beta_degenerate) {
    for (Exp n = 1; n <= max_degree; ++n) {
      // n >= 1 in theta's zero set must also be in beta's; the converse
      // holds by the table convention.
      if (op.theta(n) == 0 && !op.beta(n).is_zero())
        return fail(n, n, Poly::constant(op.beta(n)), "zero_theta_content");
      count();
    }
  }

  // (4) the image of theta is a subsemigroup. With (1) verified, membership
  // in the image is exactly the fixed-point test theta(s) = s; the
  // intersection with theta's zero set is then {0} automatically.
  std::vector<Exp> fixed;
  for (Exp s = 0; s <= max_degree; ++s)
    if (op.theta(s) == s) fixed.push_back(s);
  for (Exp s : fixed) {
    for (Exp t : fixed) {
      if (s > t || s + t > max_degree) continue;
      if (op.theta(s + t) != s + t)
        return fail(s, t,
                    Poly::monomial(op.theta(s + t), 1) -
                        Poly::monomial(s + t, 1),
                    "image_semigroup");
      count();
    }
  }
  return rep;
}

}  // namespace rbmono
