#include "densepts/constructions.hpp"
#include "densepts/errors.hpp"

namespace densepts {

namespace {

// The point p of L with T_pQ = H, i.e. G p proportional to h.
ProjPoint tangency_point(const QuadricForm& Q, const HomForm& H, const IntMatrix& L, const std::string& name) {
  auto ginv = *inverse(Q.gram());
  IntVector h = H.linear_coefficients();
  RatVector rh(h.begin(), h.end());
  ProjPoint p = normalize_primitive(multiply(ginv, rh));
  bool on_line = true;
  for (const auto& row : L)
    if (dot(row, p.coords()) != 0) on_line = false;
  if (!on_line || Q.value(p.coords()) != 0)
    throw HypothesisError(name + " = " + H.to_string() + " is not the tangent hyperplane of Q at a point of L");
  return p;
}

}  // namespace

LineInQuadricResult line_in_quadric_pipeline(const QuadricForm& Q, const HomForm& H1, const HomForm& H2,
                                             const PlaceSet& S0, const LineInQuadricOptions& options) {
  if (Q.num_vars() != 4) throw DimensionError("the line-in-quadric pipeline lives in P^3");
  for (const HomForm* h : {&H1, &H2})
    if (h->degree() != 1 || h->num_vars() != 4) throw DimensionError("H1 and H2 must be hyperplanes of P^3");
  IntMatrix hrows{H1.linear_coefficients(), H2.linear_coefficients()};
  if (rank(hrows) != 2) throw HypothesisError("H1 and H2 must be distinct hyperplanes");

  IntMatrix basis = kernel_basis(hrows);
  ProjPoint A = ProjPoint::from_integers(basis[0]);
  ProjPoint B = ProjPoint::from_integers(basis[1]);
  BinaryForm q = restrict_to_line(Q.form(), A, B);
  if (!q.is_zero()) {
    Integer disc = q.coeffs[1] * q.coeffs[1] - 4 * q.coeffs[0] * q.coeffs[2];
    if (disc == 0)
      throw HypothesisError("tangency case: L = H1 n H2 is tangent to Q but not contained in it; "
                            "this is an open problem, unsupported");
    throw HypothesisError("L = H1 n H2 is not contained in Q; use the theorem1 pipeline");
  }

  ProjPoint p1 = tangency_point(Q, H1, hrows, "H1");
  ProjPoint p2 = tangency_point(Q, H2, hrows, "H2");
  if (p1 == p2) throw HypothesisError("H1 and H2 are tangent to Q at the same point");

  // chart z = C y with rows e_k, pi(H2), pi(H1): Q minus (H1 + H2) ~ {[t : u : 1]}
  ProjectionChart chart(Q, p1);
  IntVector pi1 = chart.project(H1);
  IntVector pi2 = chart.project(H2);
  IntMatrix C;
  for (std::size_t k = 0; k < 3 && C.empty(); ++k) {
    IntVector e(3, 0);
    e[k] = 1;
    IntMatrix trial{e, pi2, pi1};
    if (determinant(trial) != 0) C = trial;
  }
  IntVector grad = multiply(Q.gram(), p1.coords());
  std::vector<Rational> required{Rational(determinant(C)), Rational(gcd_of(grad))};
  PlaceSet S = enlarge_S(S0, required, {});
  if (S.empty()) S = PlaceSet{2};
  auto inv = *inverse(C);

  DivisorConfig chart_D(3, {Component(H1), Component(H2)});
  DivisorConfig D(3, {Component(H1), Component(H2), Component(Q.form())});

  LineInQuadricResult res{p1, p2, S, {}, {}};
  GeneratedFamily& ch = res.chart;
  ch.label = "line_in_quadric_chart";
  ch.S = S;
  auto units = s_unit_enumerator(S, options.unit_bound);
  for (const auto& tv : exponent_vectors(1, options.t_bound)) {
    const long t = tv[0];
    for (const auto& u : units) {
      PointOrigin origin;
      origin.indices.push_back(t);
      origin.units.push_back(u);
      ++ch.generated;
      auto si = chart.lift(multiply(inv, RatVector{Rational(t), u, Rational(1)}));
      if (si.tangent) {
        ch.rejects.push_back({si.point, origin, {}, "line through the center is tangent to the quadric"});
        continue;
      }
      auto verdict = is_integral_point(si.point, chart_D, S);
      if (verdict.integral)
        ch.points.push_back({si.point, std::move(origin), std::move(verdict)});
      else
        ch.rejects.push_back({si.point, std::move(origin), verdict.offending, "reduces onto H1 + H2"});
    }
  }
  if (options.cert_degree > 0 && !ch.points.empty()) {
    auto pts = ch.point_list();
    ch.certificate = density_certificate_on_hypersurface(pts, options.cert_degree, Q.form());
  }

  GeneratedFamily& fam = res.family;
  fam.label = "line_in_quadric";
  fam.S = S;
  for (std::size_t i = 0; i < ch.points.size(); ++i) {
    const ProjPoint& r = ch.points[i].point;
    try {
      GeneratedFamily line = beukers_family(p1, r, D, S, options.unit_bound, 0);
      fam.generated += line.generated;
      for (auto& fp : line.points) {
        fp.origin.line = i;
        fam.points.push_back(std::move(fp));
      }
      for (auto& rj : line.rejects) {
        rj.origin.line = i;
        fam.rejects.push_back(std::move(rj));
      }
    } catch (const HypothesisError& e) {
      ++fam.generated;
      PointOrigin origin;
      origin.line = i;
      fam.rejects.push_back({r, std::move(origin), {}, e.what()});
    }
  }
  if (options.cert_degree > 0 && !fam.points.empty()) {
    auto pts = fam.point_list();
    fam.certificate = density_certificate(pts, options.cert_degree);
  }
  return res;
}

}  // namespace densepts
