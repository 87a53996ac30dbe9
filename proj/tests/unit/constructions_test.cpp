#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "densepts/constructions.hpp"
#include "densepts/errors.hpp"
#include "support/oracles.hpp"

using namespace densepts;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

ProjPoint pt(std::initializer_list<long> c) {
  IntVector v;
  for (long x : c) v.emplace_back(x);
  return ProjPoint::from_integers(v);
}

IntVector iv(std::initializer_list<long> c) {
  IntVector v;
  for (long x : c) v.emplace_back(x);
  return v;
}

HomForm form(std::size_t vars, std::vector<std::pair<Exponents, long>> terms) {
  std::vector<std::pair<Exponents, Integer>> t;
  for (auto& [e, c] : terms) t.emplace_back(e, Integer(c));
  return HomForm(vars, t);
}

const HomForm kSplit = form(4, {{{1, 1, 0, 0}, 1}, {{0, 0, 1, 1}, 1}});

void expect_hypothesis(const std::function<void()>& f, const std::string& needle) {
  try {
    f();
    ADD_FAILURE() << "expected HypothesisError containing \"" << needle << "\"";
  } catch (const HypothesisError& e) {
    EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
  }
}

ConcurrentLinesConfig r1() {
  ConcurrentLinesConfig c;
  c.b = c.d = c.f = 1;
  c.directions = {{q(1), q(2), q(3)}};
  c.alpha = 2;
  c.beta = 3;
  c.gamma = 5;
  return c;
}

/// Does 1 - u factor over {2, 3}? Trial division on numerator and denominator.
bool over_23(Rational v) {
  if (v == 0) return false;
  for (Integer x : {Integer(abs(v.get_num())), Integer(v.get_den())}) {
    while (x % 2 == 0) x /= 2;
    while (x % 3 == 0) x /= 3;
    if (x != 1) return false;
  }
  return true;
}

}  // namespace

TEST(Quadric, GramAndSingular) {
  QuadricForm Q(kSplit);
  EXPECT_EQ(Q.gram()[0][1], 1);
  EXPECT_EQ(Q.value(iv({1, 1, 1, -1})), 0);
  EXPECT_EQ(Q.bilinear(iv({0, 0, 0, 1}), iv({1, 1, 1, 0})), 1);
  EXPECT_THROW(QuadricForm(form(3, {{{1, 1, 0}, 1}})), HypothesisError);
  EXPECT_THROW(QuadricForm(HomForm::linear({1, 0, 0})), DimensionError);
}

TEST(Tangent, Examples) {
  QuadricForm Q(kSplit);
  EXPECT_EQ(tangent_hyperplane(Q, pt({0, 0, 0, 1})), HomForm::linear({0, 0, 1, 0}));
  EXPECT_EQ(tangent_hyperplane(Q, pt({1, 0, 0, 0})), HomForm::linear({0, 1, 0, 0}));
  QuadricForm C(form(3, {{{2, 0, 0}, 1}, {{0, 1, 1}, -1}}));
  EXPECT_EQ(tangent_hyperplane(C, pt({1, 1, 1})), HomForm::linear({2, -1, -1}));
  EXPECT_THROW(tangent_hyperplane(Q, pt({1, 1, 1, 1})), HypothesisError);
}

TEST(Tangent, DoubleRootAlongTangentLines) {
  QuadricForm Q(form(4, {{{2, 0, 0, 0}, 1}, {{0, 2, 0, 0}, 1}, {{0, 0, 2, 0}, -1}, {{0, 0, 0, 2}, -1}}));
  ProjPoint p = pt({1, 0, 1, 0});
  HomForm T = tangent_hyperplane(Q, p);
  EXPECT_EQ(evaluate_form(T, p), 0);
  auto basis = kernel_basis({T.linear_coefficients()});
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-4, 4);
  for (int i = 0; i < 50; ++i) {
    IntVector v(4, 0);
    for (const auto& b : basis) {
      long c = d(rng);
      for (std::size_t k = 0; k < 4; ++k) v[k] += c * b[k];
    }
    if (!make_primitive(v)) continue;
    ProjPoint r = ProjPoint::from_integers(v);
    if (r == p) continue;
    auto f = restrict_to_line(Q.form(), p, r);
    // f(t,s) = Q(tp + sr): the t^2 and ts coefficients vanish, so [1:0] = p is a double root
    EXPECT_EQ(f.coeffs[2], 0);
    EXPECT_EQ(f.coeffs[1], 0);
  }
}

TEST(SecondIntersection, Examples) {
  QuadricForm Q(kSplit);
  auto a = second_intersection(Q, pt({0, 0, 0, 1}), pt({1, 1, 1, 0}));
  EXPECT_EQ(a.point, pt({1, 1, 1, -1}));
  EXPECT_FALSE(a.tangent);
  expect_hypothesis([&] { second_intersection(Q, pt({0, 0, 0, 1}), pt({1, 0, 0, 0})); }, "lies in the quadric");
  QuadricForm C(form(3, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, -2}}));
  auto c = second_intersection(C, pt({1, 1, 1}), pt({1, -1, 0}));
  EXPECT_TRUE(c.tangent);
  EXPECT_EQ(c.point, pt({1, 1, 1}));
}

TEST(Chart, ProjectAndLift) {
  QuadricForm Q(kSplit);
  ProjectionChart chart(Q, pt({0, 0, 0, 1}));
  EXPECT_EQ(chart.project(HomForm::linear({1, 0, 0, 0})), iv({1, 0, 0}));
  auto lifted = chart.lift({q(1), q(1), q(1)});
  EXPECT_EQ(lifted.point, pt({1, 1, 1, -1}));
  EXPECT_THROW(chart.project(HomForm::linear({0, 0, 0, 1})), HypothesisError);
}

TEST(Chart, QuadricChartPoints) {
  QuadricForm Q(kSplit);
  ProjPoint p = pt({0, 0, 0, 1});
  std::vector<HomForm> E{HomForm::linear({1, 0, 0, 0}), HomForm::linear({0, 1, 0, 0})};
  PlaceSet S = enlarge_S({2, 3}, chart_required_units(Q, p, E), {});
  auto fam = quadric_chart_points(Q, p, E, S, 2, 2);
  EXPECT_GE(fam.points.size(), 50u);
  EXPECT_TRUE(fam.rejects.empty());
  ASSERT_TRUE(fam.certificate);
  EXPECT_TRUE(fam.certificate->dense);
  EXPECT_EQ(fam.certificate->target_rank, 9u);
  // first tuple is all ones: the base point
  ASSERT_FALSE(fam.points.empty());
  for (const auto& u : fam.points[0].origin.units) EXPECT_EQ(u, 1);
  EXPECT_TRUE(fam.points[0].verdict.integral);
  for (const auto& fp : fam.points) EXPECT_EQ(Q.value(fp.point.coords()), 0);
  std::vector<HomForm> bad{HomForm::linear({0, 0, 1, 0}), HomForm::linear({1, 0, 0, 0})};
  expect_hypothesis([&] { quadric_chart_points(Q, p, bad, S, 1); }, "tangency/degeneration");
}

TEST(Beukers, ProjectiveLineExample) {
  ProjPoint A = pt({1, 0}), B = pt({0, 1});
  DivisorConfig D(1, {LinearSubspace({A.coords()}), LinearSubspace({B.coords()})});
  auto fam = beukers_family(A, B, D, {2}, 3);
  std::set<ProjPoint> expect;
  for (long e = -3; e <= 3; ++e)
    for (long sgn : {1L, -1L}) {
      Rational u = sgn * pow(Rational(2), e);
      expect.insert(normalize_primitive(std::vector<Rational>{u, q(1)}));
    }
  auto got = fam.point_list();
  EXPECT_EQ(std::set<ProjPoint>(got.begin(), got.end()), expect);
  EXPECT_EQ(got.size(), 14u);
  EXPECT_TRUE(fam.rejects.empty());
}

TEST(Beukers, LineOnQuadric) {
  DivisorConfig D(3, {HomForm::linear({1, 0, 0, 0}), HomForm::linear({0, 1, 0, 0}), kSplit});
  auto fam = beukers_family(pt({0, 0, 0, 1}), pt({1, 1, 1, -1}), D, {2}, 2);
  EXPECT_GE(fam.points.size(), 8u);
  EXPECT_TRUE(fam.rejects.empty());
  EXPECT_EQ(fam.generated, fam.points.size());
}

TEST(Beukers, Preconditions) {
  DivisorConfig D(1, {LinearSubspace({iv({1, 0})})});
  expect_hypothesis([&] { beukers_family(pt({1, 0}), pt({1, 0}), D, {2}, 1); }, "distinct");
  expect_hypothesis([&] { beukers_family(pt({1, 0}), pt({0, 1}), D, PlaceSet{}, 1); }, "no finite prime");
  DivisorConfig AtA(1, {LinearSubspace({iv({1, 5})})});
  expect_hypothesis([&] { beukers_family(pt({1, 5}), pt({2, 3}), AtA, {2}, 1); }, "7");
  DivisorConfig X(2, {HomForm::linear({0, 0, 1})});
  expect_hypothesis([&] { beukers_family(pt({1, 0, 0}), pt({0, 1, 0}), X, {2}, 1); }, "line inside divisor");
  DivisorConfig Y(2, {HomForm::linear({1, 1, -1})});
  expect_hypothesis([&] { beukers_family(pt({1, 0, 0}), pt({0, 1, 0}), Y, {2}, 1); }, "outside {A, B}");
}

TEST(Theorem1, SmallPlaneRun) {
  QuadricForm Q(form(3, {{{1, 1, 0}, 1}, {{0, 0, 2}, -1}}));
  Theorem1Options o;
  o.unit_bound = 2;
  o.cert_degree = 2;
  auto r = theorem1_pipeline({HomForm::linear({0, 0, 1})}, Q, {2}, o);
  EXPECT_EQ(r.line_points.first, pt({0, 1, 0}));
  EXPECT_EQ(r.line_points.second, pt({1, 0, 0}));
  EXPECT_TRUE(r.family.rejects.empty());
  EXPECT_GT(r.family.points.size(), 20u);
  ASSERT_TRUE(r.family.certificate);
  EXPECT_TRUE(r.family.certificate->dense);
  DivisorConfig D(2, {HomForm::linear({0, 0, 1}), Q.form()});
  for (const auto& fp : r.family.points) EXPECT_TRUE(is_integral_point(fp.point, D, r.S_used).integral);
}

TEST(Theorem1, HypothesisGates) {
  QuadricForm Q(kSplit);
  expect_hypothesis([&] { theorem1_pipeline({HomForm::linear({1, 0, 0, 0}), HomForm::linear({2, 0, 0, 0})}, Q, {2}); },
                    "general position");
  QuadricForm T(form(3, {{{1, 1, 0}, 1}, {{0, 0, 2}, 1}}));
  expect_hypothesis([&] { theorem1_pipeline({HomForm::linear({1, 0, 0})}, T, {2}); },
                    "two rational intersection points required");
  expect_hypothesis([&] { theorem1_pipeline({HomForm::linear({0, 1, 0, 0}), HomForm::linear({0, 0, 1, 0})}, Q, {2}); },
                    "line_in_quadric");
}

TEST(LineInQuadric, Gates) {
  QuadricForm Q(kSplit);
  expect_hypothesis([&] { line_in_quadric_pipeline(Q, HomForm::linear({1, 0, 0, 0}), HomForm::linear({0, 1, 0, 0}), {2}); },
                    "not contained in Q");
  expect_hypothesis([&] { line_in_quadric_pipeline(Q, HomForm::linear({0, 0, 1, 0}), HomForm::linear({1, 1, 0, 0}), {2}); },
                    "open problem");
}

TEST(LineInQuadric, BasePoint) {
  QuadricForm Q(kSplit);
  LineInQuadricOptions o;
  o.unit_bound = 1;
  o.t_bound = 1;
  auto r = line_in_quadric_pipeline(Q, HomForm::linear({0, 1, 0, 0}), HomForm::linear({0, 0, 1, 0}), {2, 3}, o);
  EXPECT_EQ(r.p1, pt({1, 0, 0, 0}));
  EXPECT_EQ(r.p2, pt({0, 0, 0, 1}));
  ASSERT_FALSE(r.chart.points.empty());
  const auto& base = r.chart.points[0];
  ASSERT_EQ(base.origin.indices.size(), 1u);
  EXPECT_EQ(base.origin.indices[0], 0);
  ASSERT_EQ(base.origin.units.size(), 1u);
  EXPECT_EQ(base.origin.units[0], 1);
  EXPECT_TRUE(base.verdict.integral);
  EXPECT_TRUE(r.chart.rejects.empty());
  EXPECT_TRUE(r.family.rejects.empty());
}

TEST(IndexData, Examples) {
  auto a = index_data(r1(), {2, 3, 5}, 1, 1);
  ASSERT_TRUE(a);
  EXPECT_EQ(a->generator, -2);
  EXPECT_EQ(a->m_prime, 1);
  EXPECT_EQ(a->g, 0u);
  EXPECT_EQ(a->N, 1);
  auto b = index_data(r1(), {2, 3, 5}, 1, 2);
  ASSERT_TRUE(b);
  EXPECT_EQ(b->generator, -42);
  EXPECT_EQ(b->m_prime, 7);
  EXPECT_EQ(b->g, 0u);
  EXPECT_EQ(b->N, 6);
  ConcurrentLinesConfig c;
  c.b = 1;
  c.d = c.f = 1;
  c.directions = {{q(1), q(1), q(1)}};
  c.alpha = 2;
  c.beta = 3;
  c.gamma = 5;
  auto e = index_data(c, {3, 5}, 2, 1);
  ASSERT_TRUE(e);
  EXPECT_EQ(e->generator, 4);
  EXPECT_EQ(e->m_prime, 4);
  EXPECT_EQ(e->g, 2u);
  EXPECT_EQ(e->N, 32);
  EXPECT_FALSE(index_data(r1(), {2, 3, 5}, 0, 0));
}

TEST(ConcurrentLines, ValidateRejectsCollapsingLine) {
  auto c = r1();
  c.directions = {{q(1), q(1), q(1)}};
  expect_hypothesis([&] { c.validate(); }, "meets V(X");
  auto z = r1();
  z.alpha = -1;
  expect_hypothesis([&] { z.validate(); }, "infinite order");
}

TEST(ConcurrentLines, SmallRun) {
  auto cfg = r1();
  PlaceSet S = concurrent_lines_S(cfg, {2, 3, 5});
  EXPECT_EQ(S, PlaceSet({2, 3, 5}));
  auto r = concurrent_lines_pipeline(cfg, S, {-2, 2}, {-2, 2}, {0, 3}, 2);
  EXPECT_TRUE(r.family.rejects.empty());
  auto pts = r.family.point_list();
  EXPECT_NE(std::find(pts.begin(), pts.end(), pt({64, 3, 25, 1})), pts.end());
  ASSERT_TRUE(r.family.certificate);
  EXPECT_EQ(r.family.certificate->achieved_rank, 10u);
  EXPECT_EQ(r.family.generated, r.family.points.size() + r.family.rejects.size() + r.family.degenerate);
  std::map<long, int> per_k;
  for (auto [j, k] : r.degenerate_pairs) ++per_k[k];
  for (auto [k, n] : per_k) EXPECT_LE(n, 1) << "k=" << k;
  // (1,2,1) mod 7: 2^6 = 64 = 1 mod 7, and the point misses the line
  EXPECT_FALSE(oracle::lands_on(pt({64, 3, 25, 1}), cfg.lines()[0], 7));
  EXPECT_THROW(concurrent_lines_pipeline(cfg, {2}, {0, 1}, {0, 1}, {0, 1}), HypothesisError);
}

TEST(UnitEquation, Examples) {
  auto has = [](const auto& v, Rational a, Rational b) {
    return std::find(v.begin(), v.end(), std::make_pair(a, b)) != v.end();
  };
  auto s2 = unit_equation_solutions({2}, 4);
  EXPECT_TRUE(has(s2, q(2), q(-1)));
  EXPECT_TRUE(has(s2, q(-1), q(2)));
  EXPECT_TRUE(has(s2, q(1, 2), q(1, 2)));
  EXPECT_TRUE(unit_equation_solutions(PlaceSet{}, 6).empty());
  auto s23 = unit_equation_solutions({2, 3}, 8);
  const std::vector<std::pair<Rational, Rational>> expect{
      {q(3), q(-2)}, {q(4), q(-3)}, {q(9), q(-8)}, {q(1, 3), q(2, 3)}, {q(3, 4), q(1, 4)}};
  for (const auto& [a, b] : expect)
    EXPECT_TRUE(has(s23, a, b)) << a << " " << b;
  for (const auto& [u, v] : s23) EXPECT_TRUE(has(s23, v, u));
}

TEST(UnitEquation, BruteForce) {
  std::set<Rational> expect;
  for (long a = -6; a <= 6; ++a)
    for (long b = -6; b <= 6; ++b)
      for (long sgn : {1L, -1L}) {
        Rational u = sgn * pow(Rational(2), a) * pow(Rational(3), b);
        if (over_23(1 - u)) expect.insert(u);
      }
  std::set<Rational> got;
  for (const auto& [u, v] : unit_equation_solutions({2, 3}, 6)) {
    EXPECT_EQ(u + v, 1);
    got.insert(u);
  }
  EXPECT_EQ(got, expect);
}
