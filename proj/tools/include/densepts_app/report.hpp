#pragma once

#include <optional>
#include <string>
#include <vector>

#include "densepts_app/json_io.hpp"

namespace densepts::app {

struct Counts {
  std::size_t generated = 0;
  std::size_t verified = 0;
  std::size_t rejected = 0;
  std::size_t degenerate = 0;

  bool consistent() const { return verified + rejected + degenerate == generated; }
  friend bool operator==(const Counts&, const Counts&) = default;
};

struct CertificateSummary {
  unsigned degree = 0;
  std::size_t monomial_count = 0;
  std::size_t target_rank = 0;
  std::size_t achieved_rank = 0;
  bool dense = false;
  std::vector<std::size_t> witness_points;

  friend bool operator==(const CertificateSummary&, const CertificateSummary&) = default;
};

struct RejectRecord {
  std::optional<json> point;
  json origin;
  json evidence;  // [{"prime": "13", "component": "4"}]; prime "0" means the point lies on it
  std::string reason;

  friend bool operator==(const RejectRecord&, const RejectRecord&) = default;
};

struct PointRecord {
  json coords;
  json origin;

  friend bool operator==(const PointRecord&, const PointRecord&) = default;
};

struct Report {
  json scenario;
  std::string kind;
  std::string status = "ok";  // "ok" or "hypothesis_failure"
  std::string message;
  json S_used = json::array();
  Counts counts;
  std::optional<CertificateSummary> certificate;
  std::vector<RejectRecord> rejects;
  json extras = json::object();
  std::optional<std::vector<PointRecord>> points;
  double timing_seconds = 0;

  friend bool operator==(const Report&, const Report&) = default;
};

json to_json(const Report& r);
/// Throws SchemaError on malformed input.
Report report_from_json(const json& j);
/// Canonical serialization without the timing field, for determinism checks.
std::string stable_dump(const Report& r);

CertificateSummary summarize(const DensityCertificate& c);
json origin_json(const PointOrigin& o);
RejectRecord reject_record(const Reject& r);
PointRecord point_record(const FamilyPoint& p);
json verdict_json(const IntegralityVerdict& v);

}  // namespace densepts::app
