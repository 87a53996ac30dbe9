#include <algorithm>

#include "densepts/constructions.hpp"
#include "densepts/errors.hpp"

namespace densepts {

std::vector<ProjPoint> GeneratedFamily::point_list() const {
  std::vector<ProjPoint> out;
  out.reserve(points.size());
  for (const auto& fp : points) out.push_back(fp.point);
  return out;
}

// ------------------------------------------------------------------ QuadricForm

QuadricForm::QuadricForm(HomForm form) : form_(std::move(form)) {
  if (form_.degree() != 2) throw DimensionError("a quadric needs a form of degree 2");
  const std::size_t n = form_.num_vars();
  gram_.assign(n, IntVector(n, 0));
  for (const auto& [e, c] : form_.terms()) {
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < n; ++i)
      for (unsigned k = 0; k < e[i]; ++k) vars.push_back(i);
    if (vars[0] == vars[1]) {
      gram_[vars[0]][vars[0]] = 2 * c;
    } else {
      gram_[vars[0]][vars[1]] = c;
      gram_[vars[1]][vars[0]] = c;
    }
  }
  if (determinant(gram_) == 0) throw HypothesisError("quadric " + form_.to_string() + " is singular");
}

Integer QuadricForm::value(const IntVector& x) const { return evaluate_form(form_, x); }

Integer QuadricForm::bilinear(const IntVector& x, const IntVector& y) const { return dot(x, multiply(gram_, y)); }

HomForm tangent_hyperplane(const QuadricForm& Q, const ProjPoint& p) {
  if (p.size() != Q.num_vars()) throw DimensionError("point and quadric live in different spaces");
  if (Q.value(p.coords()) != 0) throw HypothesisError("point " + p.to_string() + " is not on the quadric");
  IntVector grad = multiply(Q.gram(), p.coords());
  if (std::all_of(grad.begin(), grad.end(), [](const Integer& x) { return x == 0; }))
    throw HypothesisError("quadric is singular at " + p.to_string());
  return HomForm::linear(grad);
}

SecondIntersection second_intersection(const QuadricForm& Q, const ProjPoint& p, const ProjPoint& q) {
  if (p.size() != Q.num_vars() || q.size() != Q.num_vars())
    throw DimensionError("points and quadric live in different spaces");
  if (p == q) throw HypothesisError("second intersection needs q != p");
  if (Q.value(p.coords()) != 0) throw HypothesisError("point " + p.to_string() + " is not on the quadric");
  Integer qq = Q.value(q.coords());
  Integer b = Q.bilinear(p.coords(), q.coords());
  if (qq == 0 && b == 0)
    throw HypothesisError("the line through " + p.to_string() + " and " + q.to_string() + " lies in the quadric");
  IntVector r(p.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = qq * p[i] - b * q[i];
  return {ProjPoint::from_integers(std::move(r)), b == 0};
}

// ------------------------------------------------------------------ ProjectionChart

ProjectionChart::ProjectionChart(const QuadricForm& Q, ProjPoint p) : quadric_(Q), center_(std::move(p)) {
  tangent_hyperplane(quadric_, center_);  // validates: on Q, smooth
  std::size_t pivot = 0;
  while (center_[pivot] == 0) ++pivot;
  for (std::size_t i = 0; i < center_.size(); ++i)
    if (i != pivot) complement_.push_back(i);
}

IntVector ProjectionChart::project(const HomForm& hyperplane) const {
  if (hyperplane.degree() != 1 || hyperplane.num_vars() != center_.size())
    throw DimensionError("projection expects a hyperplane of the ambient space");
  IntVector h = hyperplane.linear_coefficients();
  if (dot(h, center_.coords()) != 0)
    throw HypothesisError("hyperplane " + hyperplane.to_string() + " does not pass through the center " +
                          center_.to_string());
  IntVector out;
  for (std::size_t i : complement_) out.push_back(h[i]);
  return out;
}

SecondIntersection ProjectionChart::lift(const RatVector& y) const {
  if (y.size() != complement_.size()) throw DimensionError("chart coordinates have the wrong length");
  RatVector q(center_.size(), 0);
  for (std::size_t i = 0; i < y.size(); ++i) q[complement_[i]] = y[i];
  return second_intersection(quadric_, center_, normalize_primitive(q));
}

// ------------------------------------------------------------------ torus chart

namespace {

struct TorusChart {
  IntMatrix matrix;  // rows: projected E_1..E_{n-1}, projected T
  Integer content_of_gradient;
};

TorusChart build_torus_chart(const ProjectionChart& chart, const std::vector<HomForm>& E, const HomForm& T) {
  const std::size_t n = chart.center().ambient_dimension();
  if (E.size() + 1 != n)
    throw DimensionError("the quadric chart needs n-1 = " + std::to_string(n - 1) + " hyperplanes");
  TorusChart tc;
  for (const auto& h : E) {
    if (h == T) throw HypothesisError("tangency/degeneration: T_pQ is one of the hyperplanes; the quadric-chart hypothesis fails");
    tc.matrix.push_back(chart.project(h));
  }
  tc.matrix.push_back(chart.project(T));
  if (determinant(tc.matrix) == 0)
    throw HypothesisError(
        "tangency/degeneration: projected hyperplanes are not in general position; the quadric-chart hypothesis fails");
  IntVector grad = multiply(chart.quadric().gram(), chart.center().coords());
  tc.content_of_gradient = gcd_of(grad);
  return tc;
}

// Index tuples of the given length over [0, m), graded by their largest entry,
// lexicographic inside a grade.
std::vector<std::vector<std::size_t>> graded_tuples(std::size_t m, std::size_t length, std::size_t limit) {
  std::vector<std::vector<std::size_t>> out;
  if (m == 0) return out;
  std::vector<std::size_t> cur(length);
  for (std::size_t g = 0; g < m; ++g) {
    // all tuples over [0, g] containing g, lexicographic
    auto rec = [&](auto&& self, std::size_t pos, bool has_g) -> bool {
      if (pos == length) {
        if (has_g) {
          out.push_back(cur);
          if (limit && out.size() >= limit) return false;
        }
        return true;
      }
      for (std::size_t v = 0; v <= g; ++v) {
        cur[pos] = v;
        if (!self(self, pos + 1, has_g || v == g)) return false;
      }
      return true;
    };
    if (!rec(rec, 0, false)) break;
  }
  return out;
}

}  // namespace

std::vector<Rational> chart_required_units(const QuadricForm& Q, const ProjPoint& p, const std::vector<HomForm>& E) {
  ProjectionChart chart(Q, p);
  HomForm T = tangent_hyperplane(Q, p);
  TorusChart tc = build_torus_chart(chart, E, T);
  return {Rational(determinant(tc.matrix)), Rational(tc.content_of_gradient)};
}

GeneratedFamily quadric_chart_points(const QuadricForm& Q, const ProjPoint& p, const std::vector<HomForm>& E,
                                     const PlaceSet& S, unsigned unit_bound, unsigned cert_degree,
                                     std::size_t max_points) {
  ProjectionChart chart(Q, p);
  HomForm T = tangent_hyperplane(Q, p);
  TorusChart tc = build_torus_chart(chart, E, T);
  if (S.empty()) throw HypothesisError("S contains no finite prime: the S-unit group is finite");
  Integer det = determinant(tc.matrix);
  for (const Integer& v : {det, tc.content_of_gradient})
    if (!is_s_unit(S, Rational(v)))
      throw HypothesisError("S = " + S.to_string() + " must contain the primes of " + to_string(v) +
                            " (chart coordinate change); enlarge S first");

  const std::size_t n = p.ambient_dimension();
  auto inv = *inverse(tc.matrix);
  std::vector<Component> comps(E.begin(), E.end());
  comps.emplace_back(T);
  DivisorConfig config(n, std::move(comps));

  GeneratedFamily fam;
  fam.label = "quadric_chart";
  fam.S = S;
  auto units = s_unit_enumerator(S, unit_bound);
  for (const auto& tuple : graded_tuples(units.size(), n - 1, max_points)) {
    RatVector z;
    PointOrigin origin;
    for (std::size_t idx : tuple) {
      z.push_back(units[idx]);
      origin.units.push_back(units[idx]);
    }
    z.push_back(1);
    ++fam.generated;
    auto si = chart.lift(multiply(inv, z));
    if (si.tangent) {
      fam.rejects.push_back({si.point, origin, {}, "line through the center is tangent to the quadric"});
      continue;
    }
    auto verdict = is_integral_point(si.point, config, S);
    if (verdict.integral)
      fam.points.push_back({si.point, std::move(origin), std::move(verdict)});
    else
      fam.rejects.push_back({si.point, std::move(origin), verdict.offending, "reduces onto T_pQ + E"});
  }
  if (cert_degree > 0 && !fam.points.empty()) {
    auto pts = fam.point_list();
    fam.certificate = density_certificate_on_hypersurface(pts, cert_degree, Q.form());
  }
  return fam;
}

}  // namespace densepts
