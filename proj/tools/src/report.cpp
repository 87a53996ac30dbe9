#include "densepts_app/report.hpp"

namespace densepts::app {

namespace {

std::size_t read_count(const json& j, const std::string& path) {
  long v = read_long(j, path);
  if (v < 0) throw SchemaError(path, "expected a non-negative count");
  return static_cast<std::size_t>(v);
}

json certificate_json(const CertificateSummary& c) {
  json w = json::array();
  for (auto i : c.witness_points) w.push_back(count(i));
  return {{"degree", count(c.degree)},
          {"monomial_count", count(c.monomial_count)},
          {"target_rank", count(c.target_rank)},
          {"achieved_rank", count(c.achieved_rank)},
          {"dense", c.dense},
          {"witness_points", w}};
}

CertificateSummary certificate_from_json(const json& j, const std::string& path) {
  CertificateSummary c;
  c.degree = read_unsigned(require(j, "degree", path), path + ".degree");
  c.monomial_count = read_count(require(j, "monomial_count", path), path + ".monomial_count");
  c.target_rank = read_count(require(j, "target_rank", path), path + ".target_rank");
  c.achieved_rank = read_count(require(j, "achieved_rank", path), path + ".achieved_rank");
  const json& dense = require(j, "dense", path);
  if (!dense.is_boolean()) throw SchemaError(path + ".dense", "expected a boolean");
  c.dense = dense.get<bool>();
  const json& w = require(j, "witness_points", path);
  if (!w.is_array()) throw SchemaError(path + ".witness_points", "expected an array");
  for (std::size_t i = 0; i < w.size(); ++i)
    c.witness_points.push_back(read_count(w[i], path + ".witness_points[" + std::to_string(i) + "]"));
  return c;
}

}  // namespace

json to_json(const Report& r) {
  json out;
  out["scenario"] = r.scenario;
  out["kind"] = r.kind;
  out["status"] = r.status;
  if (!r.message.empty()) out["message"] = r.message;
  out["S_used"] = r.S_used;
  out["counts"] = {{"generated", count(r.counts.generated)},
                   {"verified", count(r.counts.verified)},
                   {"rejected", count(r.counts.rejected)},
                   {"degenerate", count(r.counts.degenerate)}};
  if (r.certificate) out["certificate"] = certificate_json(*r.certificate);
  json rejects = json::array();
  for (const auto& rj : r.rejects) {
    json e{{"origin", rj.origin}, {"evidence", rj.evidence}, {"reason", rj.reason}};
    if (rj.point) e["point"] = *rj.point;
    rejects.push_back(std::move(e));
  }
  out["rejects"] = std::move(rejects);
  out["extras"] = r.extras;
  if (r.points) {
    json pts = json::array();
    for (const auto& p : *r.points) pts.push_back({{"coords", p.coords}, {"origin", p.origin}});
    out["points"] = std::move(pts);
  }
  out["timing_seconds"] = r.timing_seconds;
  return out;
}

Report report_from_json(const json& j) {
  const std::string root = "report";
  Report r;
  r.scenario = require(j, "scenario", root);
  const json& kind = require(j, "kind", root);
  const json& status = require(j, "status", root);
  if (!kind.is_string()) throw SchemaError("report.kind", "expected a string");
  if (!status.is_string()) throw SchemaError("report.status", "expected a string");
  r.kind = kind.get<std::string>();
  r.status = status.get<std::string>();
  if (j.contains("message")) r.message = j["message"].get<std::string>();
  r.S_used = require(j, "S_used", root);
  const json& c = require(j, "counts", root);
  r.counts.generated = read_count(require(c, "generated", "report.counts"), "report.counts.generated");
  r.counts.verified = read_count(require(c, "verified", "report.counts"), "report.counts.verified");
  r.counts.rejected = read_count(require(c, "rejected", "report.counts"), "report.counts.rejected");
  r.counts.degenerate = read_count(require(c, "degenerate", "report.counts"), "report.counts.degenerate");
  if (j.contains("certificate")) r.certificate = certificate_from_json(j["certificate"], "report.certificate");
  const json& rejects = require(j, "rejects", root);
  if (!rejects.is_array()) throw SchemaError("report.rejects", "expected an array");
  for (std::size_t i = 0; i < rejects.size(); ++i) {
    const std::string path = "report.rejects[" + std::to_string(i) + "]";
    RejectRecord rr;
    if (rejects[i].contains("point")) rr.point = rejects[i]["point"];
    rr.origin = require(rejects[i], "origin", path);
    rr.evidence = require(rejects[i], "evidence", path);
    rr.reason = require(rejects[i], "reason", path).get<std::string>();
    r.rejects.push_back(std::move(rr));
  }
  r.extras = require(j, "extras", root);
  if (j.contains("points")) {
    std::vector<PointRecord> pts;
    for (std::size_t i = 0; i < j["points"].size(); ++i) {
      const std::string path = "report.points[" + std::to_string(i) + "]";
      pts.push_back({require(j["points"][i], "coords", path), require(j["points"][i], "origin", path)});
    }
    r.points = std::move(pts);
  }
  const json& t = require(j, "timing_seconds", root);
  if (!t.is_number()) throw SchemaError("report.timing_seconds", "expected a number");
  r.timing_seconds = t.get<double>();
  return r;
}

std::string stable_dump(const Report& r) {
  json j = to_json(r);
  j.erase("timing_seconds");
  return j.dump();
}

CertificateSummary summarize(const DensityCertificate& c) {
  return {c.degree, c.monomial_count, c.target_rank, c.achieved_rank, c.dense, c.witness_points};
}

json origin_json(const PointOrigin& o) {
  json out = json::object();
  if (!o.units.empty()) {
    json u = json::array();
    for (const auto& x : o.units) u.push_back(to_string(x));
    out["units"] = u;
  }
  if (!o.indices.empty()) {
    json ix = json::array();
    for (auto x : o.indices) ix.push_back(std::to_string(x));
    out["indices"] = ix;
  }
  if (o.line) out["line"] = count(*o.line);
  return out;
}

json verdict_json(const IntegralityVerdict& v) {
  json ev = json::array();
  for (const auto& o : v.offending) ev.push_back({{"prime", to_string(o.prime)}, {"component", count(o.component)}});
  return ev;
}

RejectRecord reject_record(const Reject& r) {
  RejectRecord out;
  if (r.point) out.point = to_json(*r.point);
  out.origin = origin_json(r.origin);
  out.evidence = verdict_json({false, r.evidence});
  out.reason = r.reason;
  return out;
}

PointRecord point_record(const FamilyPoint& p) { return {to_json(p.point), origin_json(p.origin)}; }

}  // namespace densepts::app
