#pragma once

// Points, forms and linear subvarieties of P^n over Q, plus the exact
// rank machinery behind density certificates.

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "densepts/arith.hpp"
#include "densepts/linalg.hpp"

namespace densepts {

/// A point of P^n(Q) stored as its unique primitive integer representative
/// whose first nonzero coordinate is positive.
class ProjPoint {
 public:
  /// Normalizes; throws ArithmeticError on the zero vector.
  static ProjPoint from_integers(IntVector coords);

  const IntVector& coords() const { return coords_; }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  std::size_t size() const { return coords_.size(); }
  std::size_t ambient_dimension() const { return coords_.size() - 1; }

  std::string to_string() const;  // "[1,3,0]"

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.coords_ < b.coords_; }

 private:
  explicit ProjPoint(IntVector coords) : coords_(std::move(coords)) {}
  IntVector coords_;
};

/// Clears denominators, divides by the gcd and fixes the sign.
ProjPoint normalize_primitive(std::span<const Rational> raw);

using Exponents = std::vector<unsigned>;

/// Homogeneous form with coprime integer coefficients. Terms are kept in
/// lexicographically descending exponent order (X0^d first); the leading
/// coefficient is positive.
class HomForm {
 public:
  using Terms = std::map<Exponents, Integer, std::greater<Exponents>>;

  /// Sums duplicate monomials, drops zero terms, normalizes. Throws if the
  /// result is zero, has degree 0, or the exponent vectors disagree.
  HomForm(std::size_t num_vars, const std::vector<std::pair<Exponents, Integer>>& terms);

  static HomForm linear(std::span<const Integer> coefficients);
  static HomForm linear(std::initializer_list<long> coefficients);

  std::size_t num_vars() const { return num_vars_; }
  unsigned degree() const { return degree_; }
  const Terms& terms() const { return terms_; }

  /// Coefficient vector of a degree-1 form.
  IntVector linear_coefficients() const;

  std::string to_string() const;  // "X0*X1 + X2*X3"

  friend bool operator==(const HomForm& a, const HomForm& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t num_vars_ = 0;
  unsigned degree_ = 0;
  Terms terms_;
};

/// q(t, s) = sum coeffs[i] t^i s^(d-i). Not content-normalized.
struct BinaryForm {
  unsigned degree = 0;
  IntVector coeffs;

  bool is_zero() const;
  Integer content() const;
  /// Single nonzero term c t^i s^(d-i): vanishes only at [1:0] and/or [0:1].
  bool is_monomial() const;
  Integer evaluate(const Integer& t, const Integer& s) const;
  /// Discriminant of the binary form (degree >= 2), invariant under SL2(Z).
  Integer discriminant() const;
  /// Primitive product of the distinct irreducible factors (nonzero forms only).
  BinaryForm squarefree_part() const;
};

/// A d-plane spanned by primitive, sign-normalized integer rows of full rank.
class LinearSubspace {
 public:
  /// Normalizes rows; throws if the rows are dependent or of unequal length.
  explicit LinearSubspace(IntMatrix rows);
  static LinearSubspace through(const std::vector<ProjPoint>& points);

  const IntMatrix& span() const { return rows_; }
  std::size_t dimension() const { return rows_.size() - 1; }
  std::size_t ambient_dimension() const { return rows_[0].size() - 1; }
  std::string to_string() const;

  /// Same subspace over Q (ranks of both and of the union agree).
  bool same_subspace(const LinearSubspace& other) const;
  friend bool operator==(const LinearSubspace& a, const LinearSubspace& b) { return a.rows_ == b.rows_; }

 private:
  IntMatrix rows_;
};

/// A component of a divisor/subvariety configuration.
using Component = std::variant<HomForm, LinearSubspace>;

std::size_t ambient_dimension(const Component& c);
std::string describe(const Component& c);

/// Ordered list of components in a common P^n, without duplicates.
class DivisorConfig {
 public:
  DivisorConfig(std::size_t n, std::vector<Component> components);

  std::size_t ambient_dimension() const { return n_; }
  const std::vector<Component>& components() const { return components_; }
  std::size_t size() const { return components_.size(); }

 private:
  std::size_t n_;
  std::vector<Component> components_;
};

struct DensityCertificate {
  unsigned degree = 0;
  std::size_t monomial_count = 0;  // C(n+d, d)
  /// Rank required for density: monomial_count for P^n, reduced by the
  /// dimension of degree-d multiples of the hypersurface when certifying
  /// density on a hypersurface.
  std::size_t target_rank = 0;
  std::size_t achieved_rank = 0;
  bool dense = false;
  std::vector<std::size_t> witness_points;
};

Integer evaluate_form(const HomForm& F, const ProjPoint& x);
Integer evaluate_form(const HomForm& F, const IntVector& x);

BinaryForm restrict_to_line(const HomForm& F, const ProjPoint& A, const ProjPoint& B);

/// gcd of all (d+2)-minors of span stacked over x; 0 iff x lies on M over Q.
Integer stacked_minor_gcd(const LinearSubspace& M, const ProjPoint& x);

/// gcd over i<j of |A_i B_j - A_j B_i|; 0 iff A == B.
Integer pair_minor_gcd(const ProjPoint& A, const ProjPoint& B);

/// Every subset of size k <= n+1 has linearly independent coefficient vectors.
bool general_position(std::span<const HomForm> hyperplanes);

/// Degree-d monomials in num_vars variables, graded lexicographic (X0^d first).
std::vector<Exponents> monomials(std::size_t num_vars, unsigned degree);

std::size_t binomial(std::size_t n, std::size_t k);

/// Exact rank of the |points| x C(n+d,d) monomial evaluation matrix.
DensityCertificate density_certificate(std::span<const ProjPoint> points, unsigned degree);

/// Same, but density is measured inside the hypersurface V(F): the target rank
/// is C(n+d,d) - C(n+d-e,d-e) with e = deg F.
DensityCertificate density_certificate_on_hypersurface(std::span<const ProjPoint> points,
                                                       unsigned degree, const HomForm& F);

}  // namespace densepts
