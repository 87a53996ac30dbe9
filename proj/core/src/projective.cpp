#include "densepts/projective.hpp"

#include <algorithm>
#include <sstream>

#include "densepts/errors.hpp"

namespace densepts {

// ---------------------------------------------------------------- ProjPoint

ProjPoint ProjPoint::from_integers(IntVector coords) {
  if (coords.size() < 2) throw DimensionError("a projective point needs at least two coordinates");
  if (!make_primitive(coords)) throw ArithmeticError("the zero vector is not a projective point");
  return ProjPoint(std::move(coords));
}

std::string ProjPoint::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += densepts::to_string(coords_[i]);
  }
  return s + "]";
}

ProjPoint normalize_primitive(std::span<const Rational> raw) {
  Integer den = 1;
  for (const auto& x : raw) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  IntVector v;
  v.reserve(raw.size());
  for (const auto& x : raw) v.push_back(x.get_num() * (den / x.get_den()));
  return ProjPoint::from_integers(std::move(v));
}

// ---------------------------------------------------------------- HomForm

HomForm::HomForm(std::size_t num_vars, const std::vector<std::pair<Exponents, Integer>>& terms)
    : num_vars_(num_vars) {
  if (num_vars < 2) throw DimensionError("a form on P^n needs at least two variables");
  bool have_degree = false;
  for (const auto& [e, c] : terms) {
    if (e.size() != num_vars) throw DimensionError("exponent vector length differs from the variable count");
    unsigned d = 0;
    for (unsigned x : e) d += x;
    if (!have_degree) {
      degree_ = d;
      have_degree = true;
    } else if (d != degree_) {
      throw DimensionError("form is not homogeneous");
    }
    terms_[e] += c;
  }
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
  if (terms_.empty()) throw ArithmeticError("the zero form defines no hypersurface");
  if (degree_ == 0) throw DimensionError("constant forms define no hypersurface");

  IntVector coeffs;
  for (const auto& [e, c] : terms_) coeffs.push_back(c);
  Integer g = gcd_of(coeffs);
  if (terms_.begin()->second < 0) g = -g;
  for (auto& [e, c] : terms_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

HomForm HomForm::linear(std::span<const Integer> coefficients) {
  std::vector<std::pair<Exponents, Integer>> terms;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    Exponents e(coefficients.size(), 0);
    e[i] = 1;
    terms.emplace_back(std::move(e), coefficients[i]);
  }
  return HomForm(coefficients.size(), terms);
}

HomForm HomForm::linear(std::initializer_list<long> coefficients) {
  IntVector v(coefficients.begin(), coefficients.end());
  return linear(v);
}

IntVector HomForm::linear_coefficients() const {
  if (degree_ != 1) throw DimensionError("linear_coefficients of a form of degree " + std::to_string(degree_));
  IntVector v(num_vars_, 0);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < num_vars_; ++i)
      if (e[i] == 1) v[i] = c;
  return v;
}

std::string HomForm::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1) {
      out << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << "*";
      out << "X" << i;
      if (e[i] > 1) out << "^" << e[i];
      wrote = true;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------- BinaryForm

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Integer& c) { return c == 0; });
}

Integer BinaryForm::content() const { return gcd_of(coeffs); }

bool BinaryForm::is_monomial() const {
  return std::count_if(coeffs.begin(), coeffs.end(), [](const Integer& c) { return c != 0; }) == 1;
}

Integer BinaryForm::evaluate(const Integer& t, const Integer& s) const {
  Integer v = 0;
  for (unsigned i = 0; i <= degree; ++i) v += coeffs[i] * pow(t, i) * pow(s, degree - i);
  return v;
}

namespace {

// Coefficients (ascending in t) of f(t, s + k t) for the form f.
IntVector shear(const BinaryForm& f, const Integer& k) {
  const unsigned d = f.degree;
  IntVector out(d + 1, 0);
  for (unsigned i = 0; i <= d; ++i) {
    if (f.coeffs[i] == 0) continue;
    // t^i (s + k t)^(d-i) = sum_j C(d-i, j) k^j t^(i+j) s^(d-i-j)
    const unsigned m = d - i;
    Integer binom = 1;
    for (unsigned j = 0; j <= m; ++j) {
      out[i + j] += f.coeffs[i] * binom * pow(k, j);
      binom = binom * (m - j) / (j + 1);
    }
  }
  return out;
}

Integer sylvester_resultant(const IntVector& f, const IntVector& g) {
  // f, g ascending coefficient vectors with nonzero leading entries.
  const std::size_t m = f.size() - 1, n = g.size() - 1, size = m + n;
  IntMatrix syl(size, IntVector(size, 0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) syl[r][r + i] = f[m - i];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= n; ++i) syl[n + r][r + i] = g[n - i];
  return determinant(std::move(syl));
}

using RatPoly = std::vector<Rational>;  // ascending

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of a by b over Q (b nonzero, trimmed).
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  RatPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    Rational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return {q, a};
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

BinaryForm BinaryForm::squarefree_part() const {
  if (is_zero()) throw ArithmeticError("squarefree part of the zero form");
  if (is_monomial()) {
    // c t^i s^(d-i): distinct factors among t and s
    unsigned i = 0;
    while (coeffs[i] == 0) ++i;
    const unsigned has_t = i > 0 ? 1 : 0, has_s = i < degree ? 1 : 0;
    BinaryForm out{has_t + has_s, IntVector(has_t + has_s + 1, 0)};
    out.coeffs[has_t] = 1;
    return out;
  }
  long k = 0;
  IntVector f = coeffs;
  while (f[degree] == 0) f = shear(*this, ++k);
  RatPoly fp(f.begin(), f.end()), dfp;
  for (unsigned i = 1; i <= degree; ++i) dfp.push_back(Rational(f[i] * i));
  RatPoly g = poly_gcd(fp, dfp);
  RatPoly h = divmod(fp, g).first;
  trim(h);
  Integer den = 1;
  for (auto& c : h) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  BinaryForm out{static_cast<unsigned>(h.size() - 1), {}};
  for (auto& c : h) out.coeffs.push_back(c.get_num() * (den / c.get_den()));
  if (k != 0) out.coeffs = shear(out, -k);
  Integer cont = out.content();
  for (auto& c : out.coeffs) c /= cont;
  return out;
}

Integer BinaryForm::discriminant() const {
  if (degree < 2) throw DimensionError("discriminant needs degree >= 2");
  if (is_zero()) return 0;
  IntVector f = coeffs;
  for (long k = 1; f[degree] == 0; ++k) f = shear(*this, k);
  IntVector df(degree);
  for (unsigned i = 1; i <= degree; ++i) df[i - 1] = f[i] * i;
  Integer res = sylvester_resultant(f, df);
  Integer disc = res / f[degree];
  if ((degree * (degree - 1) / 2) % 2 == 1) disc = -disc;
  return disc;
}

// ---------------------------------------------------------------- LinearSubspace

LinearSubspace::LinearSubspace(IntMatrix rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw DimensionError("a linear subspace needs at least one spanning point");
  const std::size_t width = rows_[0].size();
  if (width < 2) throw DimensionError("spanning points need at least two coordinates");
  for (auto& r : rows_) {
    if (r.size() != width) throw DimensionError("spanning points of unequal length");
    if (!make_primitive(r)) throw ArithmeticError("zero row in a subspace span");
  }
  if (rank(rows_) != rows_.size()) throw ArithmeticError("subspace span rows are linearly dependent");
  if (rows_.size() >= width) throw DimensionError("span fills the whole projective space");
}

LinearSubspace LinearSubspace::through(const std::vector<ProjPoint>& points) {
  IntMatrix rows;
  for (const auto& p : points) rows.push_back(p.coords());
  return LinearSubspace(std::move(rows));
}

std::string LinearSubspace::to_string() const {
  std::string s = "span{";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += ",";
    s += "(";
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j) s += ",";
      s += densepts::to_string(rows_[i][j]);
    }
    s += ")";
  }
  return s + "}";
}

bool LinearSubspace::same_subspace(const LinearSubspace& other) const {
  if (other.rows_.size() != rows_.size() || other.rows_[0].size() != rows_[0].size()) return false;
  IntMatrix all = rows_;
  all.insert(all.end(), other.rows_.begin(), other.rows_.end());
  return rank(all) == rows_.size();
}

// ---------------------------------------------------------------- components

std::size_t ambient_dimension(const Component& c) {
  if (auto* f = std::get_if<HomForm>(&c)) return f->num_vars() - 1;
  return std::get<LinearSubspace>(c).ambient_dimension();
}

std::string describe(const Component& c) {
  if (auto* f = std::get_if<HomForm>(&c)) return "V(" + f->to_string() + ")";
  return std::get<LinearSubspace>(c).to_string();
}

DivisorConfig::DivisorConfig(std::size_t n, std::vector<Component> components)
    : n_(n), components_(std::move(components)) {
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (densepts::ambient_dimension(components_[i]) != n_)
      throw DimensionError("component " + std::to_string(i) + " does not live in P^" + std::to_string(n_));
    for (std::size_t j = 0; j < i; ++j) {
      const auto& a = components_[i];
      const auto& b = components_[j];
      bool dup = false;
      if (a.index() == b.index()) {
        if (auto* fa = std::get_if<HomForm>(&a))
          dup = *fa == std::get<HomForm>(b);
        else
          dup = std::get<LinearSubspace>(a).same_subspace(std::get<LinearSubspace>(b));
      }
      if (dup) throw DimensionError("duplicate components " + std::to_string(j) + " and " + std::to_string(i));
    }
  }
}

// ---------------------------------------------------------------- operations

Integer evaluate_form(const HomForm& F, const IntVector& x) {
  if (x.size() != F.num_vars()) throw DimensionError("form and point live in different spaces");
  // Cache powers per variable; forms are low degree.
  std::vector<std::vector<Integer>> powers(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    powers[i].push_back(1);
    for (unsigned k = 1; k <= F.degree(); ++k) powers[i].push_back(powers[i].back() * x[i]);
  }
  Integer value = 0, term;
  for (const auto& [e, c] : F.terms()) {
    term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) term *= powers[i][e[i]];
    value += term;
  }
  return value;
}

Integer evaluate_form(const HomForm& F, const ProjPoint& x) { return evaluate_form(F, x.coords()); }

BinaryForm restrict_to_line(const HomForm& F, const ProjPoint& A, const ProjPoint& B) {
  if (A.size() != F.num_vars() || B.size() != F.num_vars())
    throw DimensionError("line and form live in different spaces");
  if (A == B) throw ArithmeticError("a line needs two distinct points");
  const unsigned d = F.degree();
  BinaryForm q{d, IntVector(d + 1, 0)};
  for (const auto& [e, c] : F.terms()) {
    // product over i of (A_i t + B_i s)^e_i, ascending in t
    IntVector poly{c};
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) {
        IntVector next(poly.size() + 1, 0);
        for (std::size_t j = 0; j < poly.size(); ++j) {
          next[j] += poly[j] * B[i];
          next[j + 1] += poly[j] * A[i];
        }
        poly = std::move(next);
      }
    }
    for (unsigned j = 0; j <= d; ++j) q.coeffs[j] += poly[j];
  }
  return q;
}

Integer stacked_minor_gcd(const LinearSubspace& M, const ProjPoint& x) {
  if (x.size() != M.span()[0].size()) throw DimensionError("point and subspace live in different spaces");
  IntMatrix stacked = M.span();
  stacked.push_back(x.coords());
  return maximal_minor_gcd(stacked);
}

Integer pair_minor_gcd(const ProjPoint& A, const ProjPoint& B) {
  if (A.size() != B.size()) throw DimensionError("points live in different spaces");
  IntVector m;
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = i + 1; j < A.size(); ++j) m.push_back(A[i] * B[j] - A[j] * B[i]);
  return gcd_of(m);
}

bool general_position(std::span<const HomForm> hyperplanes) {
  if (hyperplanes.empty()) return true;
  const std::size_t vars = hyperplanes[0].num_vars();
  IntMatrix coeffs;
  for (const auto& h : hyperplanes) {
    if (h.degree() != 1) throw DimensionError("general_position expects hyperplanes");
    if (h.num_vars() != vars) throw DimensionError("hyperplanes live in different spaces");
    coeffs.push_back(h.linear_coefficients());
  }
  const std::size_t m = coeffs.size();
  const std::size_t kmax = std::min(m, vars);
  for (std::size_t k = 1; k <= kmax; ++k) {
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    do {
      IntMatrix sub;
      for (std::size_t i = 0; i < m; ++i)
        if (pick[i]) sub.push_back(coeffs[i]);
      if (rank(sub) != k) return false;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return true;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<Exponents> monomials(std::size_t num_vars, unsigned degree) {
  std::vector<Exponents> out;
  Exponents cur(num_vars, 0);
  // recursive fill, largest exponent of X0 first
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == num_vars) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      cur[i] = e;
      self(self, i + 1, left - e);
    }
  };
  rec(rec, 0, degree);
  return out;
}

namespace {

DensityCertificate certify(std::span<const ProjPoint> points, unsigned degree, std::size_t target) {
  if (points.empty()) throw DimensionError("density certificate needs at least one point");
  if (degree == 0) throw DimensionError("density certificate needs degree >= 1");
  const std::size_t vars = points[0].size();
  auto monos = monomials(vars, degree);

  DensityCertificate cert;
  cert.degree = degree;
  cert.monomial_count = monos.size();
  cert.target_rank = target;

  // smallest points first: large coordinates only enter if still needed
  std::vector<std::size_t> order(points.size());
  std::vector<std::size_t> bits(points.size(), 0);
  for (std::size_t idx = 0; idx < points.size(); ++idx) {
    if (points[idx].size() != vars) throw DimensionError("points live in different spaces");
    order[idx] = idx;
    for (const auto& c : points[idx].coords()) bits[idx] += mpz_sizeinbase(c.get_mpz_t(), 2);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return bits[a] < bits[b]; });

  IncrementalEchelon echelon(monos.size());
  std::vector<std::vector<Integer>> powers(vars);
  for (std::size_t pos = 0; pos < order.size() && echelon.rank() < target; ++pos) {
    const std::size_t idx = order[pos];
    const auto& x = points[idx];
    for (std::size_t i = 0; i < vars; ++i) {
      powers[i].assign(1, Integer(1));
      for (unsigned k = 1; k <= degree; ++k) powers[i].push_back(powers[i].back() * x[i]);
    }
    IntVector row;
    row.reserve(monos.size());
    for (const auto& e : monos) {
      Integer v = 1;
      for (std::size_t i = 0; i < vars; ++i)
        if (e[i]) v *= powers[i][e[i]];
      row.push_back(std::move(v));
    }
    if (echelon.insert(std::move(row))) cert.witness_points.push_back(idx);
  }
  std::sort(cert.witness_points.begin(), cert.witness_points.end());
  cert.achieved_rank = echelon.rank();
  cert.dense = cert.achieved_rank == cert.target_rank;
  return cert;
}

}  // namespace

DensityCertificate density_certificate(std::span<const ProjPoint> points, unsigned degree) {
  const std::size_t n = points.empty() ? 0 : points[0].ambient_dimension();
  return certify(points, degree, binomial(n + degree, degree));
}

DensityCertificate density_certificate_on_hypersurface(std::span<const ProjPoint> points,
                                                       unsigned degree, const HomForm& F) {
  const std::size_t n = F.num_vars() - 1;
  for (const auto& x : points)
    if (evaluate_form(F, x) != 0) throw DimensionError("point " + x.to_string() + " is not on the hypersurface");
  std::size_t full = binomial(n + degree, degree);
  std::size_t multiples = degree >= F.degree() ? binomial(n + degree - F.degree(), degree - F.degree()) : 0;
  return certify(points, degree, full - multiples);
}

}  // namespace densepts
