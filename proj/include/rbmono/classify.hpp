#pragma once

#include <string>
#include <variant>

#include "rbmono/verify.hpp"

namespace rbmono {

struct Weight0Result {
  WeightZeroParams params;
};
struct NonzeroResult {
  NonzeroClass cls;
};
struct NotRotaBaxter {
  Exp m = 0;
  Exp n = 0;
  Poly defect;
};
struct Inconclusive {
  std::string reason;
  Exp needed_degree = 0;
};

// A Weight0/Nonzero verdict means "consistent with the closed form and the
// Rota-Baxter equation on the entire provided range" -- finite data never
// certifies more than that, and anything short of full agreement comes back
// as Inconclusive rather than an extrapolation.
using ClassificationResult =
    std::variant<Weight0Result, NonzeroResult, NotRotaBaxter, Inconclusive>;

// Build a weight-zero operator from its classification data (validated), or
// a weight-nonzero operator from its class.
MonomialOperator construct_weight0(WeightZeroParams params);
MonomialOperator construct_nonzero(NonzeroClass cls);

// Recover (d, c, b) from a table sampled on [0, n_bound]. The modulus is
// always the gcd of the observed shifts, which makes the recovered data
// unique; the all-zero table canonically maps to d=1, c=[0], b=[0].
ClassificationResult classify_weight0(const MonomialOperator& op, Exp n_bound);

// Match a table against the four weight-nonzero classes. Requires
// lambda != 0 (throws ZeroWeight) and n_bound >= 2 to separate the classes;
// smaller ranges come back Inconclusive.
ClassificationResult classify_nonzero(const MonomialOperator& op,
                                      const Rational& lambda, Exp n_bound);

}  // namespace rbmono
