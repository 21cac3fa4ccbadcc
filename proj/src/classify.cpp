#include "rbmono/classify.hpp"

#include <algorithm>

#include "rbmono/errors.hpp"
#include "rbmono/semigroup.hpp"

namespace rbmono {

MonomialOperator construct_weight0(WeightZeroParams params) {
  return MonomialOperator::from_weight0(std::move(params));
}

MonomialOperator construct_nonzero(NonzeroClass cls) {
  return MonomialOperator::from_nonzero(std::move(cls));
}

namespace {

// Classification always works on a finite sample.
MonomialOperator as_sampled_table(const MonomialOperator& op, Exp n_bound) {
  if (const auto limit = op.table_limit()) {
    if (n_bound > *limit) throw DegreeExceedsTable(n_bound);
    return op;
  }
  return op.tabulate(n_bound);
}

ClassificationResult refutation(const RBReport& report) {
  const RBWitness& w = *report.witness;
  return NotRotaBaxter{w.m, w.n, w.defect};
}

}  // namespace

ClassificationResult classify_weight0(const MonomialOperator& op,
                                      Exp n_bound) {
  const MonomialOperator table = as_sampled_table(op, n_bound);

  bool all_zero = true;
  for (Exp n = 0; n <= n_bound && all_zero; ++n)
    all_zero = table.beta(n).is_zero();
  if (all_zero) return Weight0Result{WeightZeroParams::zero()};

  // Refute first: any in-range Rota-Baxter failure settles the question.
  const RBReport rb = check_rb(table, Rational(0), n_bound,
                               ExecPolicy::parallel,
                               RangePolicy::skip_out_of_range);
  if (!rb.pass()) return refutation(rb);

  SupportDecomposition dec;
  try {
    dec = decompose_support(table, n_bound);
  } catch (const InsufficientData& e) {
    return Inconclusive{e.what(), 2 * n_bound};
  } catch (const InconsistentDecomposition& e) {
    return Inconclusive{e.what(), 2 * n_bound};
  }

  if (dec.d > 0 && dec.d - 1 > n_bound)
    return Inconclusive{"inferred modulus d=" + std::to_string(dec.d) +
                            " exceeds the sampled range",
                        5 * dec.d};

  WeightZeroParams params;
  params.d = dec.d;
  params.c.assign(dec.d, 0);
  params.b.assign(dec.d, Rational(0));
  for (Exp r : dec.residues) {
    const Exp t = table.theta(r);
    if (t == 0 || t % dec.d != 0)
      return Inconclusive{"support residue " + std::to_string(r) +
                              " carries shift " + std::to_string(t) +
                              " incompatible with modulus " +
                              std::to_string(dec.d),
                          5 * dec.d};
    params.c[r] = t / dec.d;
    params.b[r] = table.beta(r);
  }

  std::optional<MonomialOperator> candidate;
  try {
    candidate = construct_weight0(params);
  } catch (const InvalidParams& e) {
    return Inconclusive{e.what(), 5 * dec.d};
  }
  for (Exp n = 0; n <= n_bound; ++n) {
    if (candidate->beta(n) != table.beta(n) ||
        candidate->theta(n) != table.theta(n))
      return Inconclusive{"table deviates from the recovered closed form at n=" +
                              std::to_string(n),
                          std::max<Exp>(5 * dec.d, 2 * n)};
  }
  return Weight0Result{params};
}

ClassificationResult classify_nonzero(const MonomialOperator& op,
                                      const Rational& lambda, Exp n_bound) {
  if (lambda.is_zero()) throw ZeroWeight();
  const MonomialOperator table = as_sampled_table(op, n_bound);
  if (n_bound < 2)
    return Inconclusive{"need values up to exponent 2 to separate the classes",
                        2};

  std::vector<NonzeroClass> candidates = {
      Evaluation{lambda, table.beta(1)},
      ScalarNegLambda{lambda},
      ScalarNoConstant{lambda},
      ConstantProjection{lambda},
  };

  std::vector<NonzeroClass> matches;
  for (const NonzeroClass& cls : candidates) {
    if (const auto* ev = std::get_if<Evaluation>(&cls);
        ev && ev->b.is_zero())
      continue;  // beta(1) = 0 rules the evaluation class out
    const MonomialOperator model = construct_nonzero(cls);
    bool agrees = true;
    for (Exp n = 0; n <= n_bound && agrees; ++n)
      agrees = model.beta(n) == table.beta(n) &&
               model.theta(n) == table.theta(n);
    if (agrees) matches.push_back(cls);
  }

  if (matches.size() == 1) {
    // Matched tables always replay the in-range instances; keep the check as
    // a guarantee of the verdict's meaning.
    const RBReport rb = check_rb(table, lambda, n_bound, ExecPolicy::parallel,
                                 RangePolicy::skip_out_of_range);
    if (!rb.pass()) return refutation(rb);
    return NonzeroResult{matches.front()};
  }
  if (matches.size() > 1)
    return Inconclusive{"sampled range does not separate the matching classes",
                        2 * n_bound};

  const RBReport rb = check_rb(table, lambda, n_bound, ExecPolicy::parallel,
                               RangePolicy::skip_out_of_range);
  if (!rb.pass()) return refutation(rb);
  return Inconclusive{
      "table passes the in-range instances but matches no weight-nonzero "
      "class on the sampled range",
      2 * n_bound};
}

}  // namespace rbmono
