#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "hilfer/picard.hpp"
#include "hilfer/stability.hpp"
#include "hilfer/wellposed.hpp"

namespace hilfer::io {

using nlohmann::json;

/// A problem file after validation: the problem plus the solver block.
struct LoadedProblem {
  wellposed::ProblemSpec spec;
  picard::SolverOptions solver;
  std::vector<std::string> notes;  // e.g. which constants were estimated
};

/// Settings for estimating L and M when the file does not supply them.
struct EstimateSettings {
  double x_radius = 10.0;
  int samples_t = 200;
  int samples_x = 200;
};

/// Parses problem-file JSON text. Unknown keys, missing keys and wrong types are
/// InputError with the JSON path (or byte offset for syntax errors) in the message.
/// Domain violations ("alpha must be in (1,2)") are also reported as InputError.
LoadedProblem parse_problem(const std::string& text, const EstimateSettings& est = {});

/// Reads and parses a problem file.
LoadedProblem load_problem(const std::filesystem::path& path, const EstimateSettings& est = {});

json config_json(const wellposed::ProblemSpec& spec, const picard::SolverOptions& solver);
json analysis_json(const wellposed::WellPosednessReport& report, const exprlang::RhsBounds& bounds);
json solve_json(const picard::SolveResult& result);
json stability_json(const stability::UhExperiment& experiment);

/// {"tool_version", "config", ...}; callers add the sections they computed.
json report_skeleton(const wellposed::ProblemSpec& spec, const picard::SolverOptions& solver);

/// Header `t,x`, one row per node, 17 significant digits, LF endings.
void write_solution_csv(std::ostream& out, const grid::GridFunction& x);

/// Header `iteration,diff`.
void write_history_csv(std::ostream& out, const std::vector<double>& diff_history);

}  // namespace hilfer::io
