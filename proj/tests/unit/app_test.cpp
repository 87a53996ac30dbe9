#include <filesystem>

#include <gtest/gtest.h>

#include "densepts_app/runner.hpp"

using namespace densepts;
using namespace densepts::app;

namespace {

std::string corpus(const std::string& name) { return std::string(DENSEPTS_CORPUS_DIR) + "/" + name + ".json"; }

std::string schema_field(const std::function<void()>& f) {
  try {
    f();
  } catch (const SchemaError& e) {
    return e.field();
  }
  return "<no error>";
}

}  // namespace

TEST(FormParser, Strings) {
  HomForm f = parse_form("X0*X1 + X2*X3", 4, "f");
  EXPECT_EQ(f, HomForm(4, {{{1, 1, 0, 0}, Integer(1)}, {{0, 0, 1, 1}, Integer(1)}}));
  EXPECT_EQ(parse_form("2*X0 - X1", 3, "f"), HomForm::linear({2, -1, 0}));
  EXPECT_EQ(parse_form("x0^2 - 3*X1 * X2", 3, "f").to_string(), "X0^2 - 3*X1*X2");
  EXPECT_EQ(parse_form("-X2", 3, "f"), HomForm::linear({0, 0, 1}));
}

TEST(FormParser, Errors) {
  EXPECT_EQ(schema_field([] { parse_form("X0 + X5", 3, "payload.quadric"); }), "payload.quadric");
  EXPECT_THROW(parse_form("X0 X1 +", 3, "f"), SchemaError);
  EXPECT_THROW(parse_form("3 X1", 3, "f"), SchemaError);
  EXPECT_THROW(parse_form("", 3, "f"), SchemaError);
  EXPECT_THROW(parse_form("X0 + X1^2", 3, "f"), SchemaError);
  EXPECT_THROW(parse_form("X0 - X0", 3, "f"), SchemaError);
}

TEST(FormParser, TermListRoundTrip) {
  HomForm f = parse_form("3*X0^2 - X1*X2 + 7*X2^2", 3, "f");
  EXPECT_EQ(read_form(form_terms(f), 3, "f"), f);
  EXPECT_THROW(read_form(json::array({json{{"exponents", {1, 0}}, {"coeff", "1"}}}), 3, "f"), SchemaError);
}

TEST(JsonIo, Readers) {
  EXPECT_EQ(read_integer("123456789012345678901234567890", "x"), Integer("123456789012345678901234567890"));
  EXPECT_EQ(read_integer(-5, "x"), -5);
  EXPECT_EQ(read_rational("6/4", "x"), make_rational(3, 2));
  EXPECT_THROW(read_rational("1/0", "x"), SchemaError);
  EXPECT_EQ(schema_field([] { read_placeset(json::array({"2", "4"}), "S0"); }), "S0[1]");
  EXPECT_EQ(read_point(json::array({"1/2", "1/3", "1"}), 3, "p"), ProjPoint::from_integers({Integer(3), Integer(2), Integer(6)}));
  EXPECT_EQ(schema_field([] { read_point(json::array({1, 2}), 3, "p"); }), "p");
  EXPECT_EQ(schema_field([] { require(json::object(), "payload", "scenario"); }), "scenario.payload");
  auto c = read_component(json{{"span", {{1, 2, 3, 0}, {1, 1, 1, 1}}}}, 4, "c");
  EXPECT_TRUE(std::holds_alternative<LinearSubspace>(c));
  EXPECT_EQ(to_json(Integer("-99999999999999999999")), "-99999999999999999999");
}

TEST(ReportTest, RoundTrip) {
  for (const char* name : {"theorem1_p2", "concurrent_lines_r2", "verify_examples", "unit_eq_23"}) {
    RunOptions opt;
    opt.emit_points = true;
    Report r = run_scenario(load_json_file(corpus(name)), opt);
    json j = to_json(r);
    Report back = report_from_json(json::parse(j.dump()));
    EXPECT_EQ(back, r) << name;
    EXPECT_EQ(stable_dump(back), stable_dump(r));
    EXPECT_TRUE(r.counts.consistent()) << name;
  }
}

TEST(ReportTest, IntegersAreStrings) {
  Report r = run_scenario(load_json_file(corpus("concurrent_lines_r1")), {});
  json j = to_json(r);
  EXPECT_TRUE(j["counts"]["generated"].is_string());
  for (const auto& row : j["extras"]["index_table"]) EXPECT_TRUE(row["N"].is_string());
  EXPECT_FALSE(stable_dump(r).find("timing_seconds") != std::string::npos);
}

TEST(ReportTest, MalformedReport) {
  EXPECT_THROW(report_from_json(json{{"kind", 3}}), SchemaError);
}

TEST(Runner, SchemaErrorsNameFields) {
  json sc = load_json_file(corpus("theorem1_p2"));
  sc["payload"].erase("quadric");
  EXPECT_EQ(schema_field([&] { run_scenario(sc); }), "scenario.payload.quadric");
  json bad = load_json_file(corpus("theorem1_p2"));
  bad["bounds"]["unit_bnd"] = 3;
  EXPECT_EQ(schema_field([&] { run_scenario(bad); }), "scenario.bounds.unit_bnd");
  json kind = load_json_file(corpus("theorem1_p2"));
  kind["kind"] = "theorem3";
  EXPECT_EQ(schema_field([&] { run_scenario(kind); }), "scenario.kind");
}

TEST(Runner, HypothesisFailureIsAReport) {
  json sc = load_json_file(corpus("line_in_quadric"));
  sc["payload"]["H1"] = "X2";
  sc["payload"]["H2"] = "X0 + X1";
  Report r = run_scenario(sc);
  EXPECT_EQ(r.status, "hypothesis_failure");
  EXPECT_EQ(exit_code(r), 2);
  EXPECT_NE(r.message.find("open problem"), std::string::npos);
}

TEST(Runner, Overrides) {
  json sc = load_json_file(corpus("theorem1_p2"));
  RunOptions opt;
  opt.unit_bound = 1;
  opt.cert_degree = 2;
  Report r = run_scenario(sc, opt);
  ASSERT_TRUE(r.certificate);
  EXPECT_EQ(r.certificate->degree, 2u);
  Report full = run_scenario(sc);
  EXPECT_LT(r.counts.generated, full.counts.generated);
  EXPECT_FALSE(r.points);
}

TEST(Runner, VerifyExamples) {
  Report r = run_scenario(load_json_file(corpus("verify_examples")));
  EXPECT_EQ(r.counts.verified, 3u);
  EXPECT_EQ(r.counts.rejected, 2u);
  const auto& v = r.extras["verdicts"];
  EXPECT_TRUE(v[0]["integral"].get<bool>());
  EXPECT_EQ(v[2]["offending"][0]["prime"], "0");
  Report s2 = verify_points(json::array({json::array({2, 3, 1})}),
                            json{{"ambient_dimension", 2}, {"components", {{{"form", "X0"}}, {{"form", "X1"}}, {{"form", "X2"}}}}},
                            PlaceSet{2});
  ASSERT_EQ(s2.rejects.size(), 1u);
  EXPECT_EQ(s2.rejects[0].evidence[0]["prime"], "3");
  EXPECT_EQ(s2.rejects[0].evidence[0]["component"], "1");
}

TEST(Runner, Determinism) {
  for (const auto& entry : std::filesystem::directory_iterator(DENSEPTS_CORPUS_DIR)) {
    json sc = load_json_file(entry.path().string());
    EXPECT_EQ(stable_dump(run_scenario(sc)), stable_dump(run_scenario(sc))) << entry.path();
  }
}
