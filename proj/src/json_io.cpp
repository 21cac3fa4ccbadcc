#include "rbmono/json_io.hpp"

#include <set>

#include "rbmono/errors.hpp"

namespace rbmono {

namespace {

void require_keys(const Json& doc, const std::set<std::string>& required,
                  const std::set<std::string>& optional = {}) {
  if (!doc.is_object()) throw SchemaError("expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (!required.count(key) && !optional.count(key))
      throw SchemaError("unknown field \"" + key + "\"");
  }
  for (const auto& key : required)
    if (!doc.contains(key)) throw SchemaError("missing field \"" + key + "\"");
}

Rational rational_from_json(const Json& v, const std::string& where) {
  if (!v.is_string())
    throw SchemaError(where + ": rationals must be strings like \"p\" or \"p/q\"");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const ParseError& e) {
    throw SchemaError(where + ": " + e.what());
  }
}

Exp natural_from_json(const Json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    throw SchemaError(where + ": expected a nonnegative integer");
  return static_cast<Exp>(v.get<std::int64_t>());
}

std::vector<Rational> rational_list(const Json& v, const std::string& where) {
  if (!v.is_array()) throw SchemaError(where + ": expected an array");
  std::vector<Rational> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(
        rational_from_json(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<Exp> natural_list(const Json& v, const std::string& where) {
  if (!v.is_array()) throw SchemaError(where + ": expected an array");
  std::vector<Exp> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(
        natural_from_json(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Json rationals_to_json(const std::vector<Rational>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(v.str());
  return arr;
}

Json params_to_json(const WeightZeroParams& p) {
  Json doc;
  doc["d"] = p.d;
  doc["c"] = p.c;
  doc["b"] = rationals_to_json(p.b);
  return doc;
}

Json nonzero_to_json(const NonzeroClass& cls) {
  Json doc;
  doc["class"] = class_name(cls);
  doc["lambda"] = weight_of(cls).str();
  if (const auto* ev = std::get_if<Evaluation>(&cls)) doc["b"] = ev->b.str();
  return doc;
}

}  // namespace

WeightZeroParams weight0_params_from_json(const Json& doc) {
  require_keys(doc, {"d", "c", "b"});
  WeightZeroParams p;
  p.d = natural_from_json(doc["d"], "d");
  p.c = natural_list(doc["c"], "c");
  p.b = rational_list(doc["b"], "b");
  try {
    p.validate();
  } catch (const InvalidParams& e) {
    throw SchemaError(e.what());
  }
  return p;
}

NonzeroClass nonzero_class_from_json(const Json& doc) {
  require_keys(doc, {"class", "lambda"}, {"b"});
  if (!doc["class"].is_string()) throw SchemaError("class: expected a string");
  const std::string name = doc["class"].get<std::string>();
  const Rational lambda = rational_from_json(doc["lambda"], "lambda");
  NonzeroClass cls;
  if (name == "evaluation") {
    if (!doc.contains("b"))
      throw SchemaError("class \"evaluation\" needs field \"b\"");
    cls = Evaluation{lambda, rational_from_json(doc["b"], "b")};
  } else {
    if (doc.contains("b"))
      throw SchemaError("field \"b\" only belongs to class \"evaluation\"");
    if (name == "scalar")
      cls = ScalarNegLambda{lambda};
    else if (name == "scalar_no_constant")
      cls = ScalarNoConstant{lambda};
    else if (name == "constant_projection")
      cls = ConstantProjection{lambda};
    else
      throw SchemaError("unknown class \"" + name + "\"");
  }
  try {
    validate(cls);
  } catch (const InvalidParams& e) {
    throw SchemaError(e.what());
  }
  return cls;
}

Json operator_to_json(const MonomialOperator& op) {
  Json doc;
  if (const auto* t = op.as_table()) {
    doc["kind"] = "table";
    doc["beta"] = rationals_to_json(t->beta);
    doc["theta"] = t->theta;
    return doc;
  }
  if (const auto* w = op.as_weight0()) {
    doc["kind"] = "weight0";
    Json params = params_to_json(*w);
    doc.update(params);
    return doc;
  }
  doc["kind"] = "nonzero";
  doc.update(nonzero_to_json(*op.as_nonzero()));
  return doc;
}

MonomialOperator operator_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
    throw SchemaError("operator documents need a string field \"kind\"");
  const std::string kind = doc["kind"].get<std::string>();
  if (kind == "table") {
    require_keys(doc, {"kind", "beta", "theta"});
    auto beta = rational_list(doc["beta"], "beta");
    auto theta = natural_list(doc["theta"], "theta");
    try {
      return MonomialOperator::from_table(std::move(beta), std::move(theta));
    } catch (const InvalidParams& e) {
      throw SchemaError(e.what());
    }
  }
  if (kind == "weight0") {
    Json params = doc;
    params.erase("kind");
    return MonomialOperator::from_weight0(weight0_params_from_json(params));
  }
  if (kind == "nonzero") {
    Json cls = doc;
    cls.erase("kind");
    return MonomialOperator::from_nonzero(nonzero_class_from_json(cls));
  }
  throw SchemaError("unknown operator kind \"" + kind + "\"");
}

Json report_to_json(const RBReport& report) {
  Json doc;
  doc["verdict"] = report.pass() ? "pass" : "fail";
  doc["lambda"] = report.lambda.str();
  doc["max_degree"] = report.max_degree;
  doc["checked_pairs"] = report.checked_pairs;
  doc["skipped_pairs"] = report.skipped_pairs;
  if (report.witness) {
    Json w;
    w["m"] = report.witness->m;
    w["n"] = report.witness->n;
    w["condition"] = report.witness->condition;
    w["defect"] = report.witness->defect.str();
    doc["witness"] = w;
  }
  return doc;
}

Json classification_to_json(const ClassificationResult& result) {
  Json doc;
  if (const auto* w = std::get_if<Weight0Result>(&result)) {
    doc["result"] = "weight0";
    doc["params"] = params_to_json(w->params);
  } else if (const auto* nz = std::get_if<NonzeroResult>(&result)) {
    doc["result"] = "nonzero";
    doc.update(nonzero_to_json(nz->cls));
  } else if (const auto* bad = std::get_if<NotRotaBaxter>(&result)) {
    doc["result"] = "not_rota_baxter";
    doc["witness"] = Json{{"m", bad->m}, {"n", bad->n}};
    doc["defect"] = bad->defect.str();
  } else {
    const auto& inc = std::get<Inconclusive>(result);
    doc["result"] = "inconclusive";
    doc["reason"] = inc.reason;
    doc["needed_degree"] = inc.needed_degree;
  }
  return doc;
}

Json semigroup_to_json(const SemigroupView& view) {
  Json doc;
  doc["generators"] = view.generators;
  doc["gcd"] = view.gcd;
  doc["bound"] = view.bound;
  doc["elements"] = view.elements;
  // Gap data describes the numerical semigroup after dividing out the gcd.
  doc["normalized"] = view.gcd > 1;
  doc["gaps"] = view.gaps;
  doc["frobenius"] = view.frobenius ? Json(*view.frobenius) : Json(nullptr);
  doc["conductor"] = view.conductor ? Json(*view.conductor) : Json(nullptr);
  doc["certified"] = view.certified;
  return doc;
}

Json survivors_to_json(const std::vector<Survivor>& survivors) {
  Json arr = Json::array();
  for (const auto& s : survivors) {
    Json doc;
    doc["beta"] = rationals_to_json(s.beta);
    doc["theta"] = s.theta;
    const Json cls = classification_to_json(s.classification);
    if (cls["result"] == "weight0" || cls["result"] == "nonzero")
      doc["label"] = "matched";
    else if (cls["result"] == "inconclusive")
      doc["label"] = "inconclusive";
    else
      doc["label"] = "unmatched";
    doc["classification"] = cls;
    arr.push_back(doc);
  }
  return arr;
}

}  // namespace rbmono
