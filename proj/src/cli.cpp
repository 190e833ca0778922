#include "iflin/cli.hpp"

#include <array>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <utility>

#include "iflin/ginverse.hpp"
#include "iflin/releq.hpp"
#include "iflin/spans.hpp"
#include "iflin/transforms.hpp"

namespace iflin::cli {
namespace {

using io::Json;

constexpr std::array<std::pair<Command, std::string_view>, 12> kNames{{
    {Command::kSolve, "solve"},
    {Command::kSolveLeft, "solve-left"},
    {Command::kVerify, "verify"},
    {Command::kCompose, "compose"},
    {Command::kIndep, "indep"},
    {Command::kSpan, "span"},
    {Command::kBasisCheck, "basis-check"},
    {Command::kLtmat, "ltmat"},
    {Command::kGinvCheck, "ginv-check"},
    {Command::kGinvFind, "ginv-find"},
    {Command::kLaws, "laws"},
    {Command::kAxioms, "axioms"},
}};

struct Result {
  Json body;
  bool positive = true;
};

const Json& need(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key))
    throw MalformedInput(std::string("/: missing field \"") + key + "\"");
  return doc.at(key);
}

std::string ptr(const char* key) { return std::string("/") + key; }

IfMatrix oriented(IfMatrix a, Orientation o) {
  if (o == Orientation::kRowLiteral) return a.transpose();
  return a;
}

Json optional_vector(const std::optional<IfVector>& v) {
  return v ? io::vector_to_json(*v) : Json(nullptr);
}

Result do_solve(const Json& doc, const RunConfig& cfg) {
  const IfMatrix a = oriented(io::matrix_from_json(need(doc, "A"), ptr("A")), cfg.orientation);
  const IfVector b = io::vector_from_json(need(doc, "b"), ptr("b"));
  const SolveReport r = greatest_solution(a, b);
  return {Json{{"candidate", io::vector_to_json(r.candidate)},
               {"solvable", r.solvable},
               {"residual", io::vector_to_json(r.residual)}},
          r.solvable};
}

Result do_solve_left(const Json& doc, const RunConfig&) {
  const IfMatrix b = io::matrix_from_json(need(doc, "B"), ptr("B"));
  const IfMatrix r = io::matrix_from_json(need(doc, "R"), ptr("R"));
  const MatrixSolveReport rep = greatest_left_solution(b, r);
  return {Json{{"candidate", io::matrix_to_json(rep.candidate)},
               {"solvable", rep.solvable},
               {"residual", io::matrix_to_json(rep.residual)}},
          rep.solvable};
}

Result do_verify(const Json& doc, const RunConfig& cfg) {
  const IfMatrix a = oriented(io::matrix_from_json(need(doc, "A"), ptr("A")), cfg.orientation);
  const IfVector x = io::vector_from_json(need(doc, "x"), ptr("x"));
  const IfVector b = io::vector_from_json(need(doc, "b"), ptr("b"));
  const bool holds = verify_solution(a, x, b);
  return {Json{{"holds", holds}, {"residual", io::vector_to_json(apply(a, x))}}, holds};
}

Result do_compose(const Json& doc, const RunConfig&) {
  std::vector<IfMatrix> ms;
  if (doc.is_object() && doc.contains("matrices")) {
    const Json& arr = doc.at("matrices");
    if (!arr.is_array() || arr.empty())
      throw MalformedInput("/matrices: expected a nonempty array");
    for (std::size_t i = 0; i < arr.size(); ++i)
      ms.push_back(io::matrix_from_json(arr[i], "/matrices/" + std::to_string(i)));
  } else {
    ms.push_back(io::matrix_from_json(need(doc, "A"), ptr("A")));
    ms.push_back(io::matrix_from_json(need(doc, "B"), ptr("B")));
  }
  IfMatrix product = ms.front();
  for (std::size_t i = 1; i < ms.size(); ++i) product = compose(product, ms[i]);
  return {Json{{"product", io::matrix_to_json(product)}}, true};
}

Result do_indep(const Json& doc, const RunConfig&) {
  const VectorSet s = io::vector_set_from_json(doc);
  const IndependenceReport rep = independence_report(s);
  Json deps = Json::array();
  for (const auto& d : rep.dependences)
    deps.push_back(Json{{"index", d.index}, {"coefficients", io::vector_to_json(d.coefficients)}});
  return {Json{{"independent", rep.independent}, {"dependences", std::move(deps)}},
          rep.independent};
}

Result do_span(const Json& doc, const RunConfig&) {
  const IfVector v = io::vector_from_json(need(doc, "vector"), ptr("vector"));
  const VectorSet s = io::vector_set_from_json(need(doc, "vectors"), ptr("vectors"));
  const auto coeffs = in_span(v, s);
  Json body{{"representable", coeffs.has_value()}, {"coefficients", optional_vector(coeffs)}};
  if (coeffs) body["recomposed"] = io::vector_to_json(recompose(*coeffs, s));
  return {std::move(body), coeffs.has_value()};
}

Result do_basis_check(const Json& doc, const RunConfig& cfg) {
  const VectorSet s = io::vector_set_from_json(need(doc, "vectors"), ptr("vectors"));
  const VectorSet probes = io::vector_set_from_json(need(doc, "probes"), ptr("probes"));
  const BasisReport rep = is_basis(s, probes, cfg.budget);
  Json certs = Json::array();
  for (std::size_t i = 0; i < rep.certificates.size(); ++i) {
    const auto& c = rep.certificates[i];
    certs.push_back(Json{{"probe", i},
                         {"representable", c.representable},
                         {"unique", c.unique},
                         {"coefficients", optional_vector(c.coefficients)},
                         {"alternative", optional_vector(c.alternative)}});
  }
  return {Json{{"basis", rep.basis},
               {"independent", rep.independent},
               {"certificates", std::move(certs)}},
          rep.basis};
}

Result do_ltmat(const Json& doc, const RunConfig&) {
  const bool nested = doc.is_object() && doc.contains("map");
  const LinearMap t = nested ? io::map_from_json(doc.at("map"), "/map") : io::map_from_json(doc);
  const VectorSet basis_out =
      doc.is_object() && doc.contains("basis_out")
          ? io::vector_set_from_json(doc.at("basis_out"), "/basis_out")
          : t.basis().dim() == t.codomain_dim() ? t.basis()
                                                : standard_basis(t.codomain_dim());
  const AssociatedMatrix am = matrix_of(t, basis_out);
  Json body{{"matrix", io::matrix_to_json(am.matrix)},
            {"basis_out", io::vectors_to_json(basis_out.vectors())},
            {"images", io::vectors_to_json(t.images())}};
  bool positive = true;
  if (doc.is_object() && doc.contains("expected")) {
    const IfMatrix given = io::matrix_from_json(doc.at("expected"), "/expected");
    const MatrixComparison cmp = compare_matrix(t, given, basis_out);
    Json diffs = Json::array();
    for (const auto& d : cmp.differences)
      diffs.push_back(Json{{"row", d.row},
                           {"col", d.col},
                           {"canonical", io::scalar_to_json(d.canonical)},
                           {"given", io::scalar_to_json(d.given)}});
    body["comparison"] = Json{{"faithful", cmp.faithful},
                              {"entrywise_equal", cmp.entrywise_equal},
                              {"unfaithful_columns", cmp.unfaithful_columns},
                              {"differences", std::move(diffs)}};
    positive = cmp.faithful;
  }
  return {std::move(body), positive};
}

Result do_ginv_check(const Json& doc, const RunConfig&) {
  const IfMatrix t = io::matrix_from_json(need(doc, "T"), ptr("T"));
  const IfMatrix y = io::matrix_from_json(need(doc, "Y"), ptr("Y"));
  const bool ok = is_g_inverse(t, y);
  return {Json{{"g_inverse", ok}, {"product", io::matrix_to_json(compose(compose(t, y), t))}},
          ok};
}

Result do_ginv_find(const Json& doc, const RunConfig& cfg) {
  const IfMatrix t = io::matrix_from_json(need(doc, "T"), ptr("T"));
  const auto w = cfg.exhaustive ? search_g_inverse(t, cfg.budget) : find_g_inverse(t);
  return {Json{{"regular", w.has_value()},
               {"witness", w ? io::matrix_to_json(*w) : Json(nullptr)}},
          w.has_value()};
}

Result do_laws(const Json& doc, const RunConfig&) {
  const Json& maps = need(doc, "maps");
  if (!maps.is_array() || maps.size() != 3)
    throw MalformedInput("/maps: expected exactly three maps");
  const LinearMap t1 = io::map_from_json(maps[0], "/maps/0");
  const LinearMap t2 = io::map_from_json(maps[1], "/maps/1");
  const LinearMap t3 = io::map_from_json(maps[2], "/maps/2");
  const IfScalar alpha = io::scalar_from_json(need(doc, "alpha"), ptr("alpha"));
  const IfScalar beta = io::scalar_from_json(need(doc, "beta"), ptr("beta"));
  Json checks = Json::array();
  bool all = true;
  for (const auto& c : law_suite(t1, t2, t3, alpha, beta)) {
    checks.push_back(Json{{"name", c.name}, {"passed", c.passed}});
    all = all && c.passed;
  }
  return {Json{{"checks", std::move(checks)}, {"all_passed", all}}, all};
}

Result do_axioms(const Json& doc, const RunConfig&) {
  int steps = 5;
  if (doc.is_object() && doc.contains("steps")) {
    const Json& s = doc.at("steps");
    if (!s.is_number_integer() || s.get<int>() < 1 || s.get<int>() > 20)
      throw MalformedInput("/steps: expected an integer in [1, 20]");
    steps = s.get<int>();
  }
  const std::vector<IfScalar> grid = step_grid(steps);
  Json laws = Json::array();
  bool all = true;
  for (const auto& r : check_axioms(std::span<const IfScalar>(grid))) {
    laws.push_back(Json{{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}});
    all = all && r.passed();
  }
  return {Json{{"grid_size", grid.size()}, {"laws", std::move(laws)}, {"all_passed", all}},
          all};
}

Result dispatch(Command c, const Json& doc, const RunConfig& cfg) {
  switch (c) {
    case Command::kSolve: return do_solve(doc, cfg);
    case Command::kSolveLeft: return do_solve_left(doc, cfg);
    case Command::kVerify: return do_verify(doc, cfg);
    case Command::kCompose: return do_compose(doc, cfg);
    case Command::kIndep: return do_indep(doc, cfg);
    case Command::kSpan: return do_span(doc, cfg);
    case Command::kBasisCheck: return do_basis_check(doc, cfg);
    case Command::kLtmat: return do_ltmat(doc, cfg);
    case Command::kGinvCheck: return do_ginv_check(doc, cfg);
    case Command::kGinvFind: return do_ginv_find(doc, cfg);
    case Command::kLaws: return do_laws(doc, cfg);
    case Command::kAxioms: return do_axioms(doc, cfg);
  }
  throw MalformedInput("unknown command");
}

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const DimensionMismatch*>(&e)) return "DimensionMismatch";
  if (dynamic_cast<const MalformedScalar*>(&e)) return "MalformedScalar";
  if (dynamic_cast<const ConstraintViolation*>(&e)) return "ConstraintViolation";
  if (dynamic_cast<const MalformedInput*>(&e)) return "MalformedInput";
  if (dynamic_cast<const BudgetExceeded*>(&e)) return "BudgetExceeded";
  if (dynamic_cast<const NotInSpan*>(&e)) return "NotInSpan";
  if (dynamic_cast<const BasisMismatch*>(&e)) return "BasisMismatch";
  if (dynamic_cast<const ShapeError*>(&e)) return "ShapeError";
  return "InternalError";
}

}  // namespace

std::string_view command_name(Command c) {
  for (const auto& [cmd, name] : kNames)
    if (cmd == c) return name;
  return "unknown";
}

std::optional<Command> command_from_name(std::string_view name) {
  for (const auto& [cmd, n] : kNames)
    if (n == name) return cmd;
  return std::nullopt;
}

const std::vector<Command>& all_commands() {
  static const std::vector<Command> cmds = [] {
    std::vector<Command> v;
    for (const auto& [cmd, name] : kNames) v.push_back(cmd);
    return v;
  }();
  return cmds;
}

Outcome execute(const RunConfig& config) {
  Outcome out;
  Json& report = out.report;
  report["command"] = std::string(command_name(config.command));
  report["inputs"] = Json{{"paths", config.inputs}, {"documents", Json::array()}};
  report["result"] = nullptr;
  report["diagnostics"] =
      Json{{"orientation", config.orientation == Orientation::kRowLiteral ? "row-literal"
                                                                          : "standard"},
           {"budget", config.budget},
           {"mode", config.exhaustive ? "exhaustive" : "constructive"}};
  if (config.timestamp) report["timestamp"] = utc_now();

  if (config.budget < 1) {
    report["diagnostics"]["error"] = Json{{"kind", "MalformedInput"},
                                          {"message", "budget must be at least 1"}};
    out.exit_code = kExitInput;
    return out;
  }

  try {
    Json doc = Json::object();
    if (config.inputs.empty()) {
      if (config.command != Command::kAxioms) {
        std::string text((std::istreambuf_iterator<char>(std::cin)), {});
        doc = io::parse_document(text, "<stdin>");
        report["inputs"]["documents"].push_back(doc);
      }
    } else {
      if (config.inputs.size() > 1)
        throw MalformedInput("each command takes a single input document");
      doc = io::read_document(config.inputs.front());
      report["inputs"]["documents"].push_back(doc);
    }
    Result r = dispatch(config.command, doc, config);
    report["result"] = std::move(r.body);
    out.exit_code = r.positive ? kExitOk : kExitNegative;
  } catch (const BudgetExceeded& e) {
    report["diagnostics"]["error"] = Json{{"kind", error_kind(e)}, {"message", e.what()}};
    out.exit_code = kExitBudget;
  } catch (const std::exception& e) {
    report["diagnostics"]["error"] = Json{{"kind", error_kind(e)}, {"message", e.what()}};
    out.exit_code = kExitInput;
  }
  return out;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Outcome o = execute(config);
  const std::string text = o.report.dump(2) + "\n";
  if (config.output) {
    std::ofstream f(*config.output);
    if (!f) {
      err << "cannot write " << *config.output << "\n";
      return kExitInput;
    }
    f << text;
  } else {
    out << text;
  }
  if (o.report["diagnostics"].contains("error"))
    err << "error: " << o.report["diagnostics"]["error"]["message"].get<std::string>() << "\n";
  return o.exit_code;
}

}  // namespace iflin::cli
