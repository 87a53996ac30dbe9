#include <algorithm>

#include "densepts/constructions.hpp"
#include "densepts/errors.hpp"

namespace densepts {

namespace {

// The two points where the line through A and B meets V(q), q a binary quadratic
// with positive square discriminant. Point (t, s) is t A + s B.
std::pair<ProjPoint, ProjPoint> quadratic_roots(const BinaryForm& q, const ProjPoint& A, const ProjPoint& B) {
  const Integer& c0 = q.coeffs[0];  // s^2
  const Integer& c1 = q.coeffs[1];  // t s
  const Integer& c2 = q.coeffs[2];  // t^2
  Integer disc = c1 * c1 - 4 * c0 * c2;
  if (disc <= 0 || !mpz_perfect_square_p(disc.get_mpz_t()))
    throw HypothesisError("two rational intersection points required: L meets Q in a " +
                          std::string(disc == 0 ? "double point" : "conjugate pair"));
  Integer root = sqrt(disc);
  auto at = [&](const Rational& t, const Rational& s) {
    RatVector v(A.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = t * A[i] + s * B[i];
    return normalize_primitive(v);
  };
  std::vector<ProjPoint> pts;
  if (c2 == 0) {
    pts.push_back(at(1, 0));
    pts.push_back(at(-c0, c1));
  } else {
    pts.push_back(at(make_rational(-c1 + root, 2 * c2), 1));
    pts.push_back(at(make_rational(-c1 - root, 2 * c2), 1));
  }
  std::sort(pts.begin(), pts.end());
  return {pts[0], pts[1]};
}

}  // namespace

Theorem1Result theorem1_pipeline(const std::vector<HomForm>& H, const QuadricForm& Q, const PlaceSet& S0,
                                 const Theorem1Options& options) {
  const std::size_t vars = Q.num_vars();
  const std::size_t n = vars - 1;
  if (n < 2) throw DimensionError("the quadric pipeline needs n >= 2");
  if (H.size() + 1 != n)
    throw DimensionError("expected n-1 = " + std::to_string(n - 1) + " hyperplanes, got " + std::to_string(H.size()));
  IntMatrix rows;
  for (const auto& h : H) {
    if (h.degree() != 1 || h.num_vars() != vars) throw DimensionError("H must consist of hyperplanes of P^n");
    rows.push_back(h.linear_coefficients());
  }
  if (!general_position(H)) throw HypothesisError("hyperplanes H are not in general position");

  IntMatrix basis = kernel_basis(rows);
  ProjPoint A = ProjPoint::from_integers(basis[0]);
  ProjPoint B = ProjPoint::from_integers(basis[1]);
  BinaryForm q = restrict_to_line(Q.form(), A, B);
  if (q.is_zero())
    throw HypothesisError("the line L = H_1 n ... n H_{n-1} lies in Q: two rational intersection points required "
                          "(use the line_in_quadric pipeline)");

  if (options.point_choice > 1) throw DimensionError("point_choice must be 0 or 1");
  auto line_points = quadratic_roots(q, A, B);
  const ProjPoint& center = options.point_choice == 0 ? line_points.first : line_points.second;
  const ProjPoint& other = options.point_choice == 0 ? line_points.second : line_points.first;
  HomForm T = tangent_hyperplane(Q, center);

  std::vector<Rational> required = chart_required_units(Q, center, H);
  DivisorConfig quadric_only(n, {Component(Q.form())});
  PlaceSet S = enlarge_S(S0, required, {line_divisor_bad_primes(center, other, quadric_only)});
  if (S.empty()) S = PlaceSet{2};

  unsigned chart_cert = options.cert_degree > 0 ? 2 : 0;
  GeneratedFamily chart = quadric_chart_points(Q, center, H, S, options.unit_bound, chart_cert,
                                               options.max_chart_points);
  Theorem1Result res{line_points, center, T, S, std::move(chart), {}};

  std::vector<Component> comps(H.begin(), H.end());
  comps.emplace_back(Q.form());
  DivisorConfig D(n, std::move(comps));
  const unsigned line_bound = options.line_unit_bound.value_or(options.unit_bound);

  GeneratedFamily& fam = res.family;
  fam.label = "theorem1";
  fam.S = S;
  for (std::size_t i = 0; i < res.chart.points.size(); ++i) {
    const ProjPoint& r = res.chart.points[i].point;
    try {
      GeneratedFamily line = beukers_family(res.center, r, D, S, line_bound, 0);
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
