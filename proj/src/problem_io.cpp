#include "hilfer/problem_io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "hilfer/errors.hpp"

namespace hilfer::io {

namespace {

constexpr int kPsiSamples = 2001;

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) {
      throw InputError(where + ": unknown key \"" + key + "\"");
    }
  }
}

const json& require(const json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw InputError(where + ": missing required key \"" + key + "\"");
  }
  return *it;
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) {
    throw InputError(where + ": expected a number");
  }
  return v.get<double>();
}

int integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) {
    throw InputError(where + ": expected an integer");
  }
  return v.get<int>();
}

std::string string(const json& v, const std::string& where) {
  if (!v.is_string()) {
    throw InputError(where + ": expected a string");
  }
  return v.get<std::string>();
}

exprlang::ExprTree expression(const std::string& text, const std::string& where) {
  try {
    return exprlang::parse(text);
  } catch (const ParseError& e) {
    throw InputError(where + ": " + e.what());
  }
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

LoadedProblem parse_problem(const std::string& text, const EstimateSettings& est) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("problem file is not valid JSON (byte " + std::to_string(e.byte) + "): " + e.what());
  }
  if (!doc.is_object()) {
    throw InputError("/: expected a JSON object");
  }
  reject_unknown(doc, {"label", "alpha", "beta", "T", "terms", "rhs", "psi", "bounds", "solver"}, "/");

  LoadedProblem out;
  auto& spec = out.spec;
  if (doc.contains("label")) spec.label = string(doc["label"], "/label");
  spec.linear.alpha = number(require(doc, "alpha", "/"), "/alpha");
  spec.linear.beta = number(require(doc, "beta", "/"), "/beta");
  spec.linear.horizon_T = number(require(doc, "T", "/"), "/T");

  const json& terms = require(doc, "terms", "/");
  if (!terms.is_array()) {
    throw InputError("/terms: expected an array");
  }
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string where = "/terms/" + std::to_string(i);
    const json& t = terms[i];
    if (!t.is_object()) {
      throw InputError(where + ": expected an object");
    }
    reject_unknown(t, {"sigma", "eta", "mu", "delta", "xi"}, where);
    fracops::BoundaryTerm term;
    term.sigma = number(require(t, "sigma", where), where + "/sigma");
    term.eta = number(require(t, "eta", where), where + "/eta");
    term.mu = number(require(t, "mu", where), where + "/mu");
    term.delta = number(require(t, "delta", where), where + "/delta");
    term.xi = number(require(t, "xi", where), where + "/xi");
    spec.linear.terms.push_back(term);
  }

  try {
    spec.linear.validate();
  } catch (const DomainError& e) {
    throw InputError(e.what());
  }

  spec.rhs_text = string(require(doc, "rhs", "/"), "/rhs");
  spec.rhs = expression(spec.rhs_text, "/rhs");
  if (doc.contains("psi")) {
    spec.psi_text = string(doc["psi"], "/psi");
    spec.psi = expression(spec.psi_text, "/psi");
    if (spec.psi->uses(exprlang::Variable::X)) {
      throw InputError("/psi: the bound function may depend on t only");
    }
  }

  std::optional<double> user_L, user_M, user_psi;
  if (doc.contains("bounds")) {
    const json& b = doc["bounds"];
    if (!b.is_object()) throw InputError("/bounds: expected an object");
    reject_unknown(b, {"L", "M", "psi_norm"}, "/bounds");
    if (b.contains("L")) user_L = number(b["L"], "/bounds/L");
    if (b.contains("M")) user_M = number(b["M"], "/bounds/M");
    if (b.contains("psi_norm")) user_psi = number(b["psi_norm"], "/bounds/psi_norm");
    for (auto [v, name] : {std::pair{user_L, "L"}, std::pair{user_M, "M"}, std::pair{user_psi, "psi_norm"}}) {
      if (v && !(*v >= 0.0)) {
        throw InputError(std::string("/bounds/") + name + ": must be non-negative");
      }
    }
  }

  auto& bounds = spec.bounds;
  const double t_max = spec.linear.t_max();
  try {
    if (!user_L || !user_M) {
      const auto estimate = exprlang::estimate_bounds(spec.rhs, t_max, est.x_radius, est.samples_t, est.samples_x);
      bounds.lipschitz_L = estimate.lipschitz_L;
      bounds.m_const = estimate.m_const;
      out.notes.push_back("sampled L/M estimates on t in [0, " + std::to_string(t_max) + "], |x| <= " +
                          std::to_string(est.x_radius));
    }
    if (user_L) {
      bounds.lipschitz_L = *user_L;
      bounds.lipschitz_user_supplied = true;
    }
    if (user_M) {
      bounds.m_const = *user_M;
      bounds.m_user_supplied = true;
    }
    if (user_psi) {
      bounds.psi_norm = *user_psi;
      bounds.psi_user_supplied = true;
    } else if (spec.psi) {
      bounds.psi_norm = exprlang::sampled_sup_in_t(*spec.psi, spec.linear.horizon_T, kPsiSamples);
    }
  } catch (const EvalError& e) {
    throw InputError(std::string("evaluating the right-hand side failed: ") + e.what());
  }

  if (doc.contains("solver")) {
    const json& s = doc["solver"];
    if (!s.is_object()) throw InputError("/solver: expected an object");
    reject_unknown(s, {"grid_n", "rule_order", "tol", "max_iter"}, "/solver");
    if (s.contains("grid_n")) out.solver.grid_n = integer(s["grid_n"], "/solver/grid_n");
    if (s.contains("rule_order")) out.solver.rule_order = integer(s["rule_order"], "/solver/rule_order");
    if (s.contains("tol")) out.solver.tol = number(s["tol"], "/solver/tol");
    if (s.contains("max_iter")) out.solver.max_iter = integer(s["max_iter"], "/solver/max_iter");
  }
  return out;
}

LoadedProblem load_problem(const std::filesystem::path& path, const EstimateSettings& est) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot read problem file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str(), est);
}

json config_json(const wellposed::ProblemSpec& spec, const picard::SolverOptions& solver) {
  json terms = json::array();
  for (const auto& t : spec.linear.terms) {
    terms.push_back({{"sigma", t.sigma}, {"eta", t.eta}, {"mu", t.mu}, {"delta", t.delta}, {"xi", t.xi}});
  }
  json problem = {{"label", spec.label},
                  {"alpha", spec.linear.alpha},
                  {"beta", spec.linear.beta},
                  {"T", spec.linear.horizon_T},
                  {"terms", terms},
                  {"rhs", spec.rhs_text},
                  {"psi", spec.psi ? json(spec.psi_text) : json(nullptr)}};
  json bounds = {{"L", spec.bounds.lipschitz_L},
                 {"M", spec.bounds.m_const},
                 {"psi_norm", optional_number(spec.bounds.psi_norm)},
                 {"L_user_supplied", spec.bounds.lipschitz_user_supplied},
                 {"M_user_supplied", spec.bounds.m_user_supplied},
                 {"psi_user_supplied", spec.bounds.psi_user_supplied}};
  json s = {{"grid_n", solver.grid_n},
            {"rule_order", solver.rule_order},
            {"tol", solver.tol},
            {"max_iter", solver.max_iter},
            {"uniform_mesh", solver.uniform_mesh},
            {"interpolation", solver.interpolation == grid::Interpolation::Linear ? "linear" : "monotone_cubic"}};
  return {{"problem", problem}, {"bounds", bounds}, {"solver", s}};
}

json analysis_json(const wellposed::WellPosednessReport& r, const exprlang::RhsBounds& bounds) {
  return {{"gamma", r.gamma},
          {"delta", r.delta_const},
          {"omega", optional_number(r.omega)},
          {"lambda", optional_number(r.lambda_const)},
          {"L", bounds.lipschitz_L},
          {"l_omega", optional_number(r.l_omega)},
          {"l_lambda", optional_number(r.l_lambda)},
          {"radius_r", optional_number(r.radius_r)},
          {"radius_r_star", optional_number(r.radius_r_star)},
          {"ulam_hyers_Cf", optional_number(r.ulam_hyers_Cf)},
          {"resonant", r.resonant},
          {"verdict_unique", r.verdict_unique},
          {"verdict_exists", r.verdict_exists},
          {"warnings", r.warnings},
          {"errors", r.errors}};
}

json solve_json(const picard::SolveResult& r) {
  return {{"iterations", r.iterations},
          {"converged", r.converged},
          {"certified", r.certified},
          {"final_residual", r.final_residual},
          {"boundary_residual", r.boundary_residual},
          {"solution_sup", grid::sup_norm(r.solution)},
          {"nodes", r.solution.size()},
          {"diff_history", r.diff_history}};
}

json stability_json(const stability::UhExperiment& e) {
  json reports = json::array();
  for (const auto& r : e.reports) {
    reports.push_back({{"epsilon", r.epsilon},
                       {"g", r.g_label},
                       {"deviation", r.deviation},
                       {"cf_bound", r.cf_bound},
                       {"theta", r.cf_bound},
                       {"bound_holds", r.bound_holds},
                       {"omega_eps", r.omega_eps},
                       {"residual_bound_lhs", r.residual_bound_lhs},
                       {"residual_bound_holds", r.residual_bound_holds},
                       {"tightness", r.tightness},
                       {"perturbed_iterations", r.perturbed_iterations}});
  }
  return {{"ulam_hyers_Cf", e.ulam_hyers_Cf},
          {"omega", e.omega},
          {"reports", reports},
          {"skipped", e.skipped},
          {"warnings", e.warnings},
          {"summary", "finite perturbation family: no counterexample found does not prove the bound"}};
}

json report_skeleton(const wellposed::ProblemSpec& spec, const picard::SolverOptions& solver) {
  return {{"tool_version", HILFER_VERSION}, {"config", config_json(spec, solver)}};
}

void write_solution_csv(std::ostream& out, const grid::GridFunction& x) {
  out << "t,x\n";
  char buf[96];
  for (std::size_t k = 0; k < x.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", x.nodes()[k], x.values()[k]);
    out << buf;
  }
}

void write_history_csv(std::ostream& out, const std::vector<double>& diff_history) {
  out << "iteration,diff\n";
  char buf[64];
  for (std::size_t k = 0; k < diff_history.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g\n", k + 1, diff_history[k]);
    out << buf;
  }
}

}  // namespace hilfer::io
