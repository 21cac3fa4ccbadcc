#include "rbmono/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "rbmono/json_io.hpp"

namespace rbmono {

namespace {

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(what + ": " + e.what());
  }
}

MonomialOperator load_operator(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open operator file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return operator_from_json(parse_json(buf.str(), path));
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream ss(s);
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

// When a closed-form operator reaches `classify`, sample this far.
constexpr Exp kDefaultClassifyBound = 40;

struct Options {
  std::string op_file;
  std::string weight0_json;
  std::string nonzero_json;
  std::string poly_text;
  std::string lambda_text;
  std::string gens_text;
  std::string alphabet_text;
  std::int64_t tabulate = -1;
  std::uint64_t max_degree = 0;
  std::uint64_t bound = 0;
  std::uint64_t n_table = 0;
  std::uint64_t theta_bound = 0;
  std::uint64_t check_degree = 0;
};

int run_construct(const Options& opt, std::ostream& out) {
  MonomialOperator op =
      !opt.weight0_json.empty()
          ? construct_weight0(weight0_params_from_json(
                parse_json(opt.weight0_json, "--weight0")))
          : construct_nonzero(nonzero_class_from_json(
                parse_json(opt.nonzero_json, "--nonzero")));
  if (opt.tabulate >= 0) op = op.tabulate(static_cast<Exp>(opt.tabulate));
  emit(out, operator_to_json(op));
  return 0;
}

int run_apply(const Options& opt, std::ostream& out) {
  const MonomialOperator op = load_operator(opt.op_file);
  const Poly p = Poly::parse(opt.poly_text);
  out << op.apply(p).str() << "\n";
  return 0;
}

int run_check(const Options& opt, std::ostream& out) {
  const MonomialOperator op = load_operator(opt.op_file);
  const Rational lambda = Rational::parse(opt.lambda_text);
  const RBReport report = check_rb(op, lambda, opt.max_degree);
  emit(out, report_to_json(report));
  return report.pass() ? 0 : 1;
}

int run_classify(const Options& opt, std::ostream& out) {
  MonomialOperator op = load_operator(opt.op_file);
  const Rational lambda = Rational::parse(opt.lambda_text);
  const Exp n_bound =
      op.table_limit() ? *op.table_limit() : kDefaultClassifyBound;
  const ClassificationResult result =
      lambda.is_zero() ? classify_weight0(op, n_bound)
                       : classify_nonzero(op, lambda, n_bound);
  emit(out, classification_to_json(result));
  return std::holds_alternative<NotRotaBaxter>(result) ? 1 : 0;
}

int run_semigroup(const Options& opt, std::ostream& out) {
  std::vector<Exp> gens;
  for (const std::string& g : split_commas(opt.gens_text)) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(g, &pos);
    } catch (const std::exception&) {
      throw Error("--gens: \"" + g + "\" is not a natural number");
    }
    if (pos != g.size())
      throw Error("--gens: \"" + g + "\" is not a natural number");
    gens.push_back(static_cast<Exp>(v));
  }
  emit(out, semigroup_to_json(semigroup_closure(gens, opt.bound)));
  return 0;
}

int run_search(const Options& opt, std::ostream& out) {
  SearchParams params;
  params.lambda = Rational::parse(opt.lambda_text);
  params.n_table = opt.n_table;
  params.theta_bound = opt.theta_bound;
  params.check_degree = opt.check_degree;
  for (const std::string& a : split_commas(opt.alphabet_text))
    params.alphabet.push_back(Rational::parse(a));
  const auto survivors = search_exhaustive(params);
  Json doc;
  doc["lambda"] = params.lambda.str();
  doc["n_table"] = params.n_table;
  doc["theta_bound"] = params.theta_bound;
  doc["check_degree"] = params.check_degree;
  Json alphabet = Json::array();
  {
    auto sorted = params.alphabet;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (const auto& a : sorted) alphabet.push_back(a.str());
  }
  doc["alphabet"] = alphabet;
  doc["candidates"] = search_candidate_count(params);
  doc["survivors"] = survivors_to_json(survivors);
  emit(out, doc);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Monomial Rota-Baxter operators on Q[x]: construct, apply, "
               "verify, classify, search"};
  app.name("rbmono");
  app.require_subcommand(1);
  Options opt;

  auto* construct = app.add_subcommand(
      "construct", "Build an operator from classification parameters");
  auto* w0 = construct->add_option("--weight0", opt.weight0_json,
                                   "Weight-zero params JSON: "
                                   "{\"d\":1,\"c\":[1],\"b\":[\"1\"]}");
  auto* nz = construct->add_option("--nonzero", opt.nonzero_json,
                                   "Nonzero-class JSON: {\"class\":"
                                   "\"evaluation\",\"lambda\":\"-1\",\"b\":\"2\"}");
  construct->add_option("--tabulate", opt.tabulate,
                        "Emit a table sampled on exponents 0..N");
  w0->excludes(nz);

  auto* apply = app.add_subcommand("apply", "Apply an operator to a polynomial");
  apply->add_option("--op", opt.op_file, "Operator JSON file")->required();
  apply->add_option("--poly", opt.poly_text, "Polynomial, e.g. \"3x^2 + 1/2\"")
      ->required();

  auto* check = app.add_subcommand(
      "check", "Verify the Rota-Baxter equation on all monomial pairs");
  check->add_option("--op", opt.op_file, "Operator JSON file")->required();
  check->add_option("--lambda", opt.lambda_text, "Weight, e.g. -1 or 2/3")
      ->required();
  check->add_option("--max-degree", opt.max_degree, "Pair bound")->required();

  auto* classify = app.add_subcommand(
      "classify", "Recover classification parameters from an operator");
  classify->add_option("--op", opt.op_file, "Operator JSON file")->required();
  classify->add_option("--lambda", opt.lambda_text, "Weight")->required();

  auto* semigroup = app.add_subcommand(
      "semigroup", "Explore the monoid generated by the given naturals");
  semigroup->add_option("--gens", opt.gens_text, "Generators, e.g. 3,5")
      ->required();
  semigroup->add_option("--bound", opt.bound, "Exploration bound")->required();

  auto* search = app.add_subcommand(
      "search", "Enumerate all small tables surviving the instance filter");
  search->add_option("--lambda", opt.lambda_text, "Weight")->required();
  search->add_option("--n-table", opt.n_table, "Table covers 0..N")->required();
  search->add_option("--theta-bound", opt.theta_bound, "Largest shift")
      ->required();
  search->add_option("--alphabet", opt.alphabet_text,
                     "Comma-separated beta values, e.g. 0,1,1/2")
      ->required();
  search->add_option("--check-degree", opt.check_degree, "Pair bound")
      ->required();

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("rbmono");
  for (const auto& a : args) argv_storage.push_back(a);
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (construct->parsed()) {
      if (opt.weight0_json.empty() && opt.nonzero_json.empty())
        throw Error("construct needs --weight0 or --nonzero");
      return run_construct(opt, out);
    }
    if (apply->parsed()) return run_apply(opt, out);
    if (check->parsed()) return run_check(opt, out);
    if (classify->parsed()) return run_classify(opt, out);
    if (semigroup->parsed()) return run_semigroup(opt, out);
    if (search->parsed()) return run_search(opt, out);
  } catch (const Error& e) {
    Json diag;
    diag["error"] = e.what();
    err << diag.dump(2) << "\n";
    return 2;
  }
  return 2;
}

}  // namespace rbmono
