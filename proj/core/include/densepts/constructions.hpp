#pragma once

// Constructive engines producing verified S-integral points: unit families on
// lines (Beukers), projection charts on a quadric, the quadric-plus-hyperplanes
// pipeline, the line-in-quadric pipeline, the concurrent-lines construction and
// the bounded unit-equation search.
//
// Every emitted point is re-checked with is_integral_point; candidates that
// fail land in GeneratedFamily::rejects together with their evidence.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "densepts/arith.hpp"
#include "densepts/integrality.hpp"
#include "densepts/projective.hpp"

namespace densepts {

// ------------------------------------------------------------------ quadrics

/// A smooth quadric with its Gram matrix G (Q(x) = x.G.x / 2, B(x,y) = x.G.y).
class QuadricForm {
 public:
  /// Throws DimensionError for a non-quadratic form, HypothesisError if singular.
  explicit QuadricForm(HomForm form);

  const HomForm& form() const { return form_; }
  const IntMatrix& gram() const { return gram_; }
  std::size_t num_vars() const { return form_.num_vars(); }

  Integer value(const IntVector& x) const;  // Q(x)
  Integer bilinear(const IntVector& x, const IntVector& y) const;  // B(x,y)

 private:
  HomForm form_;
  IntMatrix gram_;
};

/// Primitive linear form with coefficient vector G.p. Requires Q(p) = 0.
HomForm tangent_hyperplane(const QuadricForm& Q, const ProjPoint& p);

struct SecondIntersection {
  ProjPoint point;
  bool tangent = false;  // B(p,q) = 0: the line touches Q at p and point == p
};

/// normalize(Q(q) p - B(p,q) q): the other point of line pq on Q.
/// Throws HypothesisError when the whole line lies in Q.
SecondIntersection second_intersection(const QuadricForm& Q, const ProjPoint& p, const ProjPoint& q);

// ------------------------------------------------------------------ families

struct PointOrigin {
  std::vector<Rational> units;        // u on a line, or the unit tuple of a chart point
  std::vector<long> indices;          // (j,k,l) or the affine chart parameter t
  std::optional<std::size_t> line;    // chart point whose line produced this point
};

struct FamilyPoint {
  ProjPoint point;
  PointOrigin origin;
  IntegralityVerdict verdict;
};

struct Reject {
  std::optional<ProjPoint> point;
  PointOrigin origin;
  std::vector<Offense> evidence;
  std::string reason;
};

struct GeneratedFamily {
  std::string label;
  PlaceSet S;
  std::size_t generated = 0;  // == points + rejects + degenerate
  std::size_t degenerate = 0;
  std::vector<FamilyPoint> points;
  std::vector<Reject> rejects;
  std::optional<DensityCertificate> certificate;

  std::vector<ProjPoint> point_list() const;
};

/// P(u) = normalize(u A + B) for every nonzero u from s_unit_enumerator(S, bound),
/// each verified against D. Preconditions are checked and reported as
/// HypothesisError naming the failing component or prime:
///  - the line meets each component only in A and/or B over Q,
///  - A and B are S-coprime,
///  - line_divisor_bad_primes(A, B, D) lies in S,
///  - S contains a finite prime.
/// cert_degree 0 skips the density certificate.
GeneratedFamily beukers_family(const ProjPoint& A, const ProjPoint& B, const DivisorConfig& D,
                               const PlaceSet& S, unsigned unit_bound, unsigned cert_degree = 0);

// ------------------------------------------------------------------ charts

/// Projection from a smooth point p of Q onto P^{n-1}, and its inverse on Q.
class ProjectionChart {
 public:
  ProjectionChart(const QuadricForm& Q, ProjPoint p);

  const ProjPoint& center() const { return center_; }
  const QuadricForm& quadric() const { return quadric_; }
  /// Coefficients of the image of a hyperplane through p in P^{n-1}.
  IntVector project(const HomForm& hyperplane) const;
  /// Second intersection of Q with the line through p and the lift of y.
  SecondIntersection lift(const RatVector& y) const;

 private:
  QuadricForm quadric_;
  ProjPoint center_;
  std::vector<std::size_t> complement_;  // coordinate axes completing p to a basis
};

/// Values that must be S-units for the torus chart of Q minus (T_pQ + E):
/// the determinant of the projected hyperplane matrix and the content of G.p.
/// Throws HypothesisError if the projected hyperplanes are not in general position.
std::vector<Rational> chart_required_units(const QuadricForm& Q, const ProjPoint& p,
                                           const std::vector<HomForm>& E);

/// Integral points on Q minus (T_pQ + E) from unit tuples (u_1..u_{n-1}, 1) in
/// torus coordinates. E holds n-1 hyperplanes through p. S must already contain
/// the primes of chart_required_units. max_points 0 means no limit.
GeneratedFamily quadric_chart_points(const QuadricForm& Q, const ProjPoint& p, const std::vector<HomForm>& E,
                                     const PlaceSet& S, unsigned unit_bound, unsigned cert_degree = 2,
                                     std::size_t max_points = 0);

// ------------------------------------------------------------------ pipelines

struct Theorem1Options {
  unsigned unit_bound = 2;
  unsigned cert_degree = 3;
  std::optional<unsigned> line_unit_bound;  // defaults to unit_bound
  std::size_t max_chart_points = 0;         // 0: every chart point draws a line
  std::size_t point_choice = 0;             // which of the two points of L on Q is the center
};

struct Theorem1Result {
  std::pair<ProjPoint, ProjPoint> line_points;  // L meets Q here, sorted
  ProjPoint center;
  HomForm tangent;
  PlaceSet S_used;
  GeneratedFamily chart;
  GeneratedFamily family;
};

/// Integral points on P^n minus (H_1 + ... + H_{n-1} + Q).
Theorem1Result theorem1_pipeline(const std::vector<HomForm>& H, const QuadricForm& Q, const PlaceSet& S0,
                                 const Theorem1Options& options = {});

struct LineInQuadricOptions {
  unsigned unit_bound = 2;
  unsigned t_bound = 2;
  unsigned cert_degree = 2;
};

struct LineInQuadricResult {
  ProjPoint p1, p2;  // H_i = T_{p_i} Q
  PlaceSet S_used;
  GeneratedFamily chart;
  GeneratedFamily family;
};

/// Integral points on P^3 minus (H1 + H2 + Q) when the line H1 n H2 lies in Q.
LineInQuadricResult line_in_quadric_pipeline(const QuadricForm& Q, const HomForm& H1, const HomForm& H2,
                                             const PlaceSet& S0, const LineInQuadricOptions& options = {});

// ------------------------------------------------------------------ concurrent lines

/// Lines L_i = {[a_i t + b s : c_i t + d s : e_i t + f s : s]} through p = [b:d:f:1],
/// in coordinates where the four hyperplanes are X0..X3.
struct ConcurrentLinesConfig {
  Rational b, d, f;
  std::vector<std::array<Rational, 3>> directions;  // (a_i, c_i, e_i)
  Rational alpha, beta, gamma;

  /// Throws HypothesisError naming the violated condition.
  void validate() const;
  ProjPoint center() const;
  std::vector<LinearSubspace> lines() const;
  DivisorConfig divisor() const;  // four coordinate hyperplanes, then the lines
};

struct IndexData {
  long j = 0, k = 0;
  Integer generator;  // numerator of prod_i (e_i(beta^j - d) - c_i(gamma^k - f))
  Integer m_prime;    // prime-to-S part of the generator
  unsigned g = 0;
  Integer N;          // phi(m_prime^(1+g))
};

/// nullopt when some line's generator vanishes (degenerate pair).
std::optional<IndexData> index_data(const ConcurrentLinesConfig& cfg, const PlaceSet& S, long j, long k);

/// S0 enlarged so every datum of cfg is an S-unit and every line's span is
/// reduction-stable.
PlaceSet concurrent_lines_S(const ConcurrentLinesConfig& cfg, const PlaceSet& S0);

struct IndexRange {
  long lo = 0, hi = 0;
};

struct ConcurrentLinesResult {
  PlaceSet S_used;
  GeneratedFamily family;
  std::vector<IndexData> index_table;
  std::vector<std::pair<long, long>> degenerate_pairs;
};

/// x_{j,k,l} = normalize([b alpha^(l N_jk), beta^j, gamma^k, 1]) over the ranges.
ConcurrentLinesResult concurrent_lines_pipeline(const ConcurrentLinesConfig& cfg, const PlaceSet& S,
                                                IndexRange j_range, IndexRange k_range, IndexRange l_range,
                                                unsigned cert_degree = 2);

// ------------------------------------------------------------------ unit equation

/// Pairs (u, 1 - u) with both S-units, u from s_unit_enumerator(S, bound), in that order.
std::vector<std::pair<Rational, Rational>> unit_equation_solutions(const PlaceSet& S, unsigned exponent_bound);

}  // namespace densepts
