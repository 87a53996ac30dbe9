#pragma once

#include <optional>
#include <string>

#include "densepts_app/report.hpp"

namespace densepts::app {

struct RunOptions {
  bool emit_points = false;
  std::optional<unsigned> cert_degree;
  std::optional<unsigned> unit_bound;
};

/// Dispatches a scenario to its pipeline. Throws SchemaError for malformed
/// input (exit 1); geometric hypothesis failures come back as a report with
/// status "hypothesis_failure" (exit 2).
Report run_scenario(const json& scenario, const RunOptions& options = {});

/// Standalone verdicts of points against a configuration.
Report verify_points(const json& points, const json& config, const PlaceSet& S);

/// Unit-equation solutions at each bound, with a stability flag.
Report unit_equation_report(const PlaceSet& S, const std::vector<unsigned>& bounds);

int exit_code(const Report& r);

json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace densepts::app
