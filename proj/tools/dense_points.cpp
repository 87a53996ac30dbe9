#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "densepts_app/runner.hpp"

using namespace densepts;
using namespace densepts::app;

namespace {

PlaceSet parse_s(const std::string& text) {
  json arr = json::array();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) arr.push_back(item);
  return read_placeset(arr, "--s");
}

int emit(const Report& rep, const std::string& out_path) {
  json j = to_json(rep);
  if (out_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    write_json_file(out_path, j);
  if (rep.status != "ok") std::cerr << "hypothesis failure: " << rep.message << "\n";
  return exit_code(rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verified S-integral point families and density certificates"};
  app.require_subcommand(1);

  std::string scenario_path, out_path;
  RunOptions opts;
  unsigned cert_degree = 0, unit_bound = 0;
  auto* run = app.add_subcommand("run", "run a scenario file");
  run->add_option("scenario", scenario_path, "scenario JSON")->required();
  run->add_option("-o,--output", out_path, "report path (stdout if omitted)");
  run->add_flag("--emit-points", opts.emit_points, "include every verified point");
  auto* cert_opt = run->add_option("--cert-degree", cert_degree, "override the certificate degree");
  auto* unit_opt = run->add_option("--unit-bound", unit_bound, "override the unit exponent bound");

  std::string points_path, config_path, s_text;
  auto* verify = app.add_subcommand("verify", "check points against a configuration");
  verify->add_option("points", points_path, "points JSON")->required();
  verify->add_option("config", config_path, "configuration JSON")->required();
  verify->add_option("--s", s_text, "primes of S, comma separated")->required();
  verify->add_option("-o,--output", out_path, "report path (stdout if omitted)");

  unsigned bound = 8;
  auto* units = app.add_subcommand("units", "solve u + v = 1 in S-units");
  units->add_option("--s", s_text, "primes of S, comma separated")->required();
  units->add_option("--bound", bound, "exponent bound");
  units->add_option("-o,--output", out_path, "report path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*run) {
      if (*cert_opt) opts.cert_degree = cert_degree;
      if (*unit_opt) opts.unit_bound = unit_bound;
      return emit(run_scenario(load_json_file(scenario_path), opts), out_path);
    }
    if (*verify) return emit(verify_points(load_json_file(points_path), load_json_file(config_path), parse_s(s_text)), out_path);
    return emit(unit_equation_report(parse_s(s_text), {bound}), out_path);
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 1;
}
