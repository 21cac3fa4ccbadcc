#pragma once

#include "json.hpp"

#include "rbmono/classify.hpp"
#include "rbmono/search.hpp"
#include "rbmono/semigroup.hpp"

namespace rbmono {

// Insertion-ordered JSON keeps CLI output stable.
using Json = nlohmann::ordered_json;

// Operator documents:
//   {"kind":"table","beta":["1","1/2",...],"theta":[1,2,...]}
//   {"kind":"weight0","d":2,"c":[1,0],"b":["1/3","0"]}
//   {"kind":"nonzero","class":"evaluation","lambda":"-1","b":"2"}
// Rationals are strings "p/q" or "p". Unknown fields are rejected, as are
// tables breaking the convention theta(n) = 0 whenever beta(n) = 0.
Json operator_to_json(const MonomialOperator& op);
MonomialOperator operator_from_json(const Json& doc);

WeightZeroParams weight0_params_from_json(const Json& doc);
NonzeroClass nonzero_class_from_json(const Json& doc);

Json report_to_json(const RBReport& report);
Json classification_to_json(const ClassificationResult& result);
Json semigroup_to_json(const SemigroupView& view);
Json survivors_to_json(const std::vector<Survivor>& survivors);

}  // namespace rbmono
