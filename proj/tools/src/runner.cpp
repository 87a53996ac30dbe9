#include "densepts_app/runner.hpp"

#include <chrono>
#include <fstream>
#include <set>

#include "densepts/errors.hpp"

namespace densepts::app {

namespace {

const std::set<std::string> kKinds{"theorem1", "concurrent_lines", "line_in_quadric", "beukers", "unit_equation", "verify"};
const std::set<std::string> kTopLevel{"name", "kind", "ambient_dimension", "S0", "payload", "bounds"};
const std::set<std::string> kBounds{"unit_bound", "line_unit_bound", "cert_degree", "max_chart_points", "t_bound",
                                    "j_range",    "k_range",         "l_range",     "exponent_bounds"};

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& path) {
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) throw SchemaError(path + "." + key, "unknown field");
}

struct Bounds {
  const json& obj;

  unsigned get(const std::string& key, unsigned fallback) const {
    if (!obj.contains(key)) return fallback;
    return read_unsigned(obj[key], "scenario.bounds." + key);
  }
  IndexRange range(const std::string& key, IndexRange fallback) const {
    if (!obj.contains(key)) return fallback;
    const json& r = obj[key];
    const std::string path = "scenario.bounds." + key;
    if (!r.is_array() || r.size() != 2) throw SchemaError(path, "expected [lo, hi]");
    IndexRange out{read_long(r[0], path + "[0]"), read_long(r[1], path + "[1]")};
    if (out.lo > out.hi) throw SchemaError(path, "lo must not exceed hi");
    return out;
  }
};

void fill_family(Report& rep, const GeneratedFamily& fam, bool emit_points) {
  rep.S_used = to_json(fam.S);
  rep.counts = {fam.generated, fam.points.size(), fam.rejects.size(), fam.degenerate};
  if (fam.certificate) rep.certificate = summarize(*fam.certificate);
  for (const auto& r : fam.rejects) rep.rejects.push_back(reject_record(r));
  if (emit_points) {
    std::vector<PointRecord> pts;
    for (const auto& p : fam.points) pts.push_back(point_record(p));
    rep.points = std::move(pts);
  }
}

json family_summary(const GeneratedFamily& fam) {
  json out{{"label", fam.label},
           {"generated", count(fam.generated)},
           {"verified", count(fam.points.size())},
           {"rejected", count(fam.rejects.size())}};
  if (fam.certificate) {
    const auto c = summarize(*fam.certificate);
    out["certificate"] = {{"degree", count(c.degree)},
                          {"target_rank", count(c.target_rank)},
                          {"achieved_rank", count(c.achieved_rank)},
                          {"dense", c.dense}};
  }
  return out;
}

std::size_t ambient(const json& sc) {
  long n = read_long(require(sc, "ambient_dimension", "scenario"), "scenario.ambient_dimension");
  if (n < 1 || n > 16) throw SchemaError("scenario.ambient_dimension", "expected 1 <= n <= 16");
  return static_cast<std::size_t>(n);
}

void run_theorem1(Report& rep, const json& sc, const json& payload, const Bounds& b, const RunOptions& opt) {
  const std::size_t n = ambient(sc);
  const json& hs = require(payload, "hyperplanes", "scenario.payload");
  if (!hs.is_array()) throw SchemaError("scenario.payload.hyperplanes", "expected an array of linear forms");
  std::vector<HomForm> H;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const std::string path = "scenario.payload.hyperplanes[" + std::to_string(i) + "]";
    H.push_back(read_form(hs[i], n + 1, path));
    if (H.back().degree() != 1) throw SchemaError(path, "expected a linear form");
  }
  if (H.size() + 1 != n)
    throw SchemaError("scenario.payload.hyperplanes", "expected n-1 = " + std::to_string(n - 1) + " hyperplanes");
  HomForm qf = read_form(require(payload, "quadric", "scenario.payload"), n + 1, "scenario.payload.quadric");
  if (qf.degree() != 2) throw SchemaError("scenario.payload.quadric", "expected a quadratic form");
  PlaceSet S0 = read_placeset(require(sc, "S0", "scenario"), "scenario.S0");

  Theorem1Options o;
  o.unit_bound = opt.unit_bound.value_or(b.get("unit_bound", 2));
  o.cert_degree = opt.cert_degree.value_or(b.get("cert_degree", 3));
  if (b.obj.contains("line_unit_bound") && !opt.unit_bound) o.line_unit_bound = b.get("line_unit_bound", 0);
  o.max_chart_points = b.get("max_chart_points", 0);
  if (payload.contains("point_choice")) o.point_choice = read_unsigned(payload["point_choice"], "scenario.payload.point_choice");

  QuadricForm Q(qf);
  auto res = theorem1_pipeline(H, Q, S0, o);
  fill_family(rep, res.family, opt.emit_points);
  rep.extras = {{"line_points", {to_json(res.line_points.first), to_json(res.line_points.second)}},
                {"center", to_json(res.center)},
                {"tangent_hyperplane", res.tangent.to_string()},
                {"chart", family_summary(res.chart)}};
}

void run_line_in_quadric(Report& rep, const json& sc, const json& payload, const Bounds& b, const RunOptions& opt) {
  const std::size_t n = ambient(sc);
  if (n != 3) throw SchemaError("scenario.ambient_dimension", "line_in_quadric lives in P^3");
  HomForm qf = read_form(require(payload, "quadric", "scenario.payload"), 4, "scenario.payload.quadric");
  HomForm h1 = read_form(require(payload, "H1", "scenario.payload"), 4, "scenario.payload.H1");
  HomForm h2 = read_form(require(payload, "H2", "scenario.payload"), 4, "scenario.payload.H2");
  if (qf.degree() != 2) throw SchemaError("scenario.payload.quadric", "expected a quadratic form");
  if (h1.degree() != 1) throw SchemaError("scenario.payload.H1", "expected a linear form");
  if (h2.degree() != 1) throw SchemaError("scenario.payload.H2", "expected a linear form");
  PlaceSet S0 = read_placeset(require(sc, "S0", "scenario"), "scenario.S0");

  LineInQuadricOptions o;
  o.unit_bound = opt.unit_bound.value_or(b.get("unit_bound", 2));
  o.t_bound = b.get("t_bound", 2);
  o.cert_degree = opt.cert_degree.value_or(b.get("cert_degree", 2));

  QuadricForm Q(qf);
  auto res = line_in_quadric_pipeline(Q, h1, h2, S0, o);
  fill_family(rep, res.family, opt.emit_points);
  rep.extras = {{"p1", to_json(res.p1)}, {"p2", to_json(res.p2)}, {"chart", family_summary(res.chart)}};
}

ConcurrentLinesConfig read_concurrent(const json& payload) {
  ConcurrentLinesConfig cfg;
  const json& p = require(payload, "p", "scenario.payload");
  if (!p.is_array() || p.size() != 3) throw SchemaError("scenario.payload.p", "expected [b, d, f]");
  cfg.b = read_rational(p[0], "scenario.payload.p[0]");
  cfg.d = read_rational(p[1], "scenario.payload.p[1]");
  cfg.f = read_rational(p[2], "scenario.payload.p[2]");
  const json& dirs = require(payload, "directions", "scenario.payload");
  if (!dirs.is_array() || dirs.empty()) throw SchemaError("scenario.payload.directions", "expected a non-empty array");
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    const std::string path = "scenario.payload.directions[" + std::to_string(i) + "]";
    if (!dirs[i].is_array() || dirs[i].size() != 3) throw SchemaError(path, "expected [a, c, e]");
    cfg.directions.push_back({read_rational(dirs[i][0], path + "[0]"), read_rational(dirs[i][1], path + "[1]"),
                              read_rational(dirs[i][2], path + "[2]")});
  }
  cfg.alpha = read_rational(require(payload, "alpha", "scenario.payload"), "scenario.payload.alpha");
  cfg.beta = read_rational(require(payload, "beta", "scenario.payload"), "scenario.payload.beta");
  cfg.gamma = read_rational(require(payload, "gamma", "scenario.payload"), "scenario.payload.gamma");
  return cfg;
}

void run_concurrent(Report& rep, const json& sc, const json& payload, const Bounds& b, const RunOptions& opt) {
  if (sc.contains("ambient_dimension") && ambient(sc) != 3)
    throw SchemaError("scenario.ambient_dimension", "concurrent_lines lives in P^3");
  ConcurrentLinesConfig cfg = read_concurrent(payload);
  PlaceSet S0 = read_placeset(require(sc, "S0", "scenario"), "scenario.S0");
  PlaceSet S = concurrent_lines_S(cfg, S0);
  auto res = concurrent_lines_pipeline(cfg, S, b.range("j_range", {-3, 3}), b.range("k_range", {-3, 3}),
                                       b.range("l_range", {0, 4}), opt.cert_degree.value_or(b.get("cert_degree", 2)));
  fill_family(rep, res.family, opt.emit_points);
  json table = json::array();
  for (const auto& d : res.index_table)
    table.push_back({{"j", std::to_string(d.j)},
                     {"k", std::to_string(d.k)},
                     {"generator", to_string(d.generator)},
                     {"m_prime", to_string(d.m_prime)},
                     {"g", count(d.g)},
                     {"N", to_string(d.N)}});
  json degenerate = json::array();
  for (const auto& [j, k] : res.degenerate_pairs) degenerate.push_back({std::to_string(j), std::to_string(k)});
  json lines = json::array();
  for (const auto& l : cfg.lines()) lines.push_back(to_json(Component(l)));
  rep.extras = {{"center", to_json(cfg.center())},
                {"lines", lines},
                {"index_table", table},
                {"degenerate_pairs", degenerate}};
}

void run_beukers(Report& rep, const json& sc, const json& payload, const Bounds& b, const RunOptions& opt) {
  const std::size_t n = ambient(sc);
  ProjPoint A = read_point(require(payload, "A", "scenario.payload"), n + 1, "scenario.payload.A");
  ProjPoint B = read_point(require(payload, "B", "scenario.payload"), n + 1, "scenario.payload.B");
  DivisorConfig D = read_divisor(require(payload, "divisor", "scenario.payload"), n, "scenario.payload.divisor");
  PlaceSet S0 = read_placeset(require(sc, "S0", "scenario"), "scenario.S0");
  auto fam = beukers_family(A, B, D, S0, opt.unit_bound.value_or(b.get("unit_bound", 2)),
                            opt.cert_degree.value_or(b.get("cert_degree", 0)));
  fill_family(rep, fam, opt.emit_points);
  rep.extras = {{"A", to_json(A)}, {"B", to_json(B)}};
}

void run_verify(Report& rep, const json& sc, const json& payload) {
  const std::size_t n = ambient(sc);
  PlaceSet S = read_placeset(require(sc, "S0", "scenario"), "scenario.S0");
  json config{{"ambient_dimension", n}, {"components", require(payload, "divisor", "scenario.payload")}};
  Report r = verify_points(require(payload, "points", "scenario.payload"), config, S);
  rep.S_used = r.S_used;
  rep.counts = r.counts;
  rep.rejects = std::move(r.rejects);
  rep.extras = std::move(r.extras);
}

void run_units(Report& rep, const json& sc, const Bounds& b, const RunOptions& opt) {
  PlaceSet S = read_placeset(require(sc, "S0", "scenario"), "scenario.S0");
  std::vector<unsigned> bounds;
  if (opt.unit_bound) {
    bounds.push_back(*opt.unit_bound);
  } else if (b.obj.contains("exponent_bounds")) {
    const json& eb = b.obj["exponent_bounds"];
    if (!eb.is_array() || eb.empty()) throw SchemaError("scenario.bounds.exponent_bounds", "expected a non-empty array");
    for (std::size_t i = 0; i < eb.size(); ++i)
      bounds.push_back(read_unsigned(eb[i], "scenario.bounds.exponent_bounds[" + std::to_string(i) + "]"));
  } else {
    bounds.push_back(b.get("unit_bound", 8));
  }
  Report r = unit_equation_report(S, bounds);
  rep.S_used = r.S_used;
  rep.counts = r.counts;
  rep.extras = std::move(r.extras);
}

}  // namespace

Report run_scenario(const json& sc, const RunOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  if (!sc.is_object()) throw SchemaError("scenario", "expected a JSON object");
  const json& name = require(sc, "name", "scenario");
  if (!name.is_string()) throw SchemaError("scenario.name", "expected a string");
  const json& kind = require(sc, "kind", "scenario");
  if (!kind.is_string() || !kKinds.count(kind.get<std::string>()))
    throw SchemaError("scenario.kind", "expected one of theorem1, concurrent_lines, line_in_quadric, beukers, "
                                       "unit_equation, verify");
  static const json empty = json::object();
  const json& payload = sc.contains("payload") ? sc["payload"] : empty;
  if (!payload.is_object()) throw SchemaError("scenario.payload", "expected an object");
  const json& bounds = sc.contains("bounds") ? sc["bounds"] : empty;
  if (!bounds.is_object()) throw SchemaError("scenario.bounds", "expected an object");
  reject_unknown(sc, kTopLevel, "scenario");
  reject_unknown(bounds, kBounds, "scenario.bounds");
  Bounds b{bounds};

  Report rep;
  rep.scenario = sc;
  rep.kind = kind.get<std::string>();
  try {
    if (rep.kind == "theorem1") run_theorem1(rep, sc, payload, b, opt);
    else if (rep.kind == "line_in_quadric") run_line_in_quadric(rep, sc, payload, b, opt);
    else if (rep.kind == "concurrent_lines") run_concurrent(rep, sc, payload, b, opt);
    else if (rep.kind == "beukers") run_beukers(rep, sc, payload, b, opt);
    else if (rep.kind == "verify") run_verify(rep, sc, payload);
    else run_units(rep, sc, b, opt);
  } catch (const HypothesisError& e) {
    Report fail;
    fail.scenario = sc;
    fail.kind = rep.kind;
    fail.status = "hypothesis_failure";
    fail.message = e.what();
    rep = std::move(fail);
  } catch (const SchemaError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw SchemaError("scenario", e.what());
  } catch (const std::domain_error& e) {
    throw SchemaError("scenario", e.what());
  }
  rep.timing_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

Report verify_points(const json& points, const json& config, const PlaceSet& S) {
  const std::size_t n = ambient(config);
  DivisorConfig D = read_divisor(require(config, "components", "config"), n, "config.components");
  const json& list = points.is_object() ? require(points, "points", "points") : points;
  if (!list.is_array()) throw SchemaError("points", "expected an array of points");
  Report rep;
  rep.kind = "verify";
  rep.scenario = {{"points", list}, {"config", config}, {"S", to_json(S)}};
  rep.S_used = to_json(S);
  json verdicts = json::array();
  for (std::size_t i = 0; i < list.size(); ++i) {
    ProjPoint x = read_point(list[i], n + 1, "points[" + std::to_string(i) + "]");
    IntegralityVerdict v;
    try {
      v = is_integral_point(x, D, S);
    } catch (const HypothesisError& e) {
      rep.status = "hypothesis_failure";
      rep.message = e.what();
      return rep;
    }
    ++rep.counts.generated;
    if (v.integral) {
      ++rep.counts.verified;
    } else {
      ++rep.counts.rejected;
      rep.rejects.push_back({to_json(x), {{"index", count(i)}}, verdict_json(v), "reduces onto D"});
    }
    verdicts.push_back({{"point", to_json(x)}, {"integral", v.integral}, {"offending", verdict_json(v)}});
  }
  json comps = json::array();
  for (const auto& c : D.components()) comps.push_back(describe(c));
  rep.extras = {{"verdicts", verdicts}, {"components", comps}};
  return rep;
}

Report unit_equation_report(const PlaceSet& S, const std::vector<unsigned>& bounds) {
  Report rep;
  rep.kind = "unit_equation";
  rep.S_used = to_json(S);
  json per_bound = json::array();
  std::vector<std::set<std::pair<Rational, Rational>>> sets;
  for (unsigned B : bounds) {
    auto sols = unit_equation_solutions(S, B);
    json list = json::array();
    for (const auto& [u, v] : sols) list.push_back({to_string(u), to_string(v)});
    per_bound.push_back({{"bound", count(B)}, {"count", count(sols.size())}, {"solutions", list}});
    sets.emplace_back(sols.begin(), sols.end());
  }
  bool stable = true;
  for (std::size_t i = 1; i < sets.size(); ++i) stable = stable && sets[i] == sets[0];
  rep.counts.generated = rep.counts.verified = sets.back().size();
  rep.extras = {{"per_bound", per_bound}, {"stable", stable}};
  return rep;
}

int exit_code(const Report& r) { return r.status == "ok" ? 0 : 2; }

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path, std::string("malformed JSON: ") + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace densepts::app
