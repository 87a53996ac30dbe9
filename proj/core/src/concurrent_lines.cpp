#include <limits>

#include "densepts/constructions.hpp"
#include "densepts/errors.hpp"

namespace densepts {

namespace {

constexpr long kInfinite = std::numeric_limits<long>::max();

long valuation_or_infinite(const Integer& q, const Rational& x) { return x == 0 ? kInfinite : valuation(q, x); }

// x reduces onto some L_i; when it does so by reducing to p itself the
// projection from p used to control the lines is undefined at that prime.
std::string reject_reason(const ProjPoint& x, const ProjPoint& p, const IntegralityVerdict& verdict) {
  for (const auto& o : verdict.offending)
    if (o.prime != 0 && reduce_point(x, o.prime).same_point(reduce_point(p, o.prime)))
      return "reduces to the concurrency point p modulo " + to_string(o.prime) + " (g_jk >= 1)";
  return "reduces onto D";
}

RatVector direction_row(const std::array<Rational, 3>& dir) { return {dir[0], dir[1], dir[2], Rational(0)}; }

}  // namespace

void ConcurrentLinesConfig::validate() const {
  if (b == 0 || d == 0 || f == 0) throw HypothesisError("p = [b:d:f:1] needs b, d, f nonzero");
  if (directions.empty()) throw HypothesisError("at least one line is required");
  for (const Rational* u : {&alpha, &beta, &gamma})
    if (*u == 0 || *u == 1 || *u == -1)
      throw HypothesisError("alpha, beta, gamma must be units of infinite order (not 0 or +-1)");
  const RatVector p{b, d, f, Rational(1)};
  for (std::size_t i = 0; i < directions.size(); ++i) {
    const auto v = direction_row(directions[i]);
    for (const auto& x : directions[i])
      if (x == 0) throw HypothesisError("line " + std::to_string(i) + " has a zero direction coordinate");
    // L_i meets V(X_a) n V(X_c) iff the 2x2 minor of (v, p) on columns a, c vanishes
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t c = a + 1; c < 4; ++c)
        if (v[a] * p[c] - v[c] * p[a] == 0)
          throw HypothesisError("line " + std::to_string(i) + " meets V(X" + std::to_string(a) + ") n V(X" +
                                std::to_string(c) + ")");
  }
  auto ls = lines();
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (std::size_t k = i + 1; k < ls.size(); ++k)
      if (ls[i].same_subspace(ls[k]))
        throw HypothesisError("lines " + std::to_string(i) + " and " + std::to_string(k) + " coincide");
}

ProjPoint ConcurrentLinesConfig::center() const { return normalize_primitive(RatVector{b, d, f, Rational(1)}); }

std::vector<LinearSubspace> ConcurrentLinesConfig::lines() const {
  std::vector<LinearSubspace> out;
  ProjPoint p = center();
  for (const auto& dir : directions) out.push_back(LinearSubspace::through({normalize_primitive(direction_row(dir)), p}));
  return out;
}

DivisorConfig ConcurrentLinesConfig::divisor() const {
  std::vector<Component> comps;
  for (std::size_t i = 0; i < 4; ++i) {
    IntVector h(4, 0);
    h[i] = 1;
    comps.emplace_back(HomForm::linear(h));
  }
  for (auto& l : lines()) comps.emplace_back(std::move(l));
  return DivisorConfig(3, std::move(comps));
}

std::optional<IndexData> index_data(const ConcurrentLinesConfig& cfg, const PlaceSet& S, long j, long k) {
  const Rational bj = pow(cfg.beta, j) - cfg.d;
  const Rational gk = pow(cfg.gamma, k) - cfg.f;
  Rational product = 1;
  for (const auto& dir : cfg.directions) {
    Rational g = dir[2] * bj - dir[1] * gk;
    if (g == 0) return std::nullopt;
    product *= g;
  }
  IndexData out;
  out.j = j;
  out.k = k;
  out.generator = product.get_num();
  out.m_prime = prime_to_s_part(S, out.generator);
  for (const auto& q : prime_divisors(out.m_prime)) {
    long v = std::min(valuation_or_infinite(q, bj), valuation_or_infinite(q, gk));
    out.g = std::max(out.g, static_cast<unsigned>(v));
  }
  out.N = euler_phi_of_power(out.m_prime, 1 + out.g);
  return out;
}

PlaceSet concurrent_lines_S(const ConcurrentLinesConfig& cfg, const PlaceSet& S0) {
  cfg.validate();
  std::vector<Rational> required{cfg.b, cfg.d, cfg.f, cfg.alpha, cfg.beta, cfg.gamma};
  for (const auto& dir : cfg.directions) required.insert(required.end(), dir.begin(), dir.end());
  std::vector<BadPrimeReport> reports;
  auto ls = cfg.lines();
  for (std::size_t i = 0; i < ls.size(); ++i) reports.push_back(component_bad_primes(ls[i], 4 + i));
  return enlarge_S(S0, required, reports);
}

ConcurrentLinesResult concurrent_lines_pipeline(const ConcurrentLinesConfig& cfg, const PlaceSet& S,
                                                IndexRange j_range, IndexRange k_range, IndexRange l_range,
                                                unsigned cert_degree) {
  cfg.validate();
  PlaceSet needed = concurrent_lines_S(cfg, S);
  if (!(needed == S))
    throw HypothesisError("S = " + S.to_string() + " must contain the primes of the configuration data; use " +
                          needed.to_string());
  if (j_range.lo > j_range.hi || k_range.lo > k_range.hi || l_range.lo > l_range.hi)
    throw DimensionError("empty index range");
  DivisorConfig D = cfg.divisor();
  const ProjPoint center = cfg.center();

  ConcurrentLinesResult res;
  res.S_used = S;
  GeneratedFamily& fam = res.family;
  fam.label = "concurrent_lines";
  fam.S = S;
  const long l_count = l_range.hi - l_range.lo + 1;
  for (long j = j_range.lo; j <= j_range.hi; ++j) {
    for (long k = k_range.lo; k <= k_range.hi; ++k) {
      auto idx = index_data(cfg, S, j, k);
      if (!idx) {
        res.degenerate_pairs.emplace_back(j, k);
        fam.generated += l_count;
        fam.degenerate += l_count;
        continue;
      }
      if (!idx->N.fits_slong_p()) throw ArithmeticError("N_jk too large for exponentiation");
      const long N = idx->N.get_si();
      const Rational bj = pow(cfg.beta, j), gk = pow(cfg.gamma, k);
      for (long l = l_range.lo; l <= l_range.hi; ++l) {
        PointOrigin origin;
        origin.indices = {j, k, l};
        ++fam.generated;
        ProjPoint x = normalize_primitive(RatVector{cfg.b * pow(cfg.alpha, l * N), bj, gk, Rational(1)});
        auto verdict = is_integral_point(x, D, S);
        if (verdict.integral)
          fam.points.push_back({std::move(x), std::move(origin), std::move(verdict)});
        else {
          std::string reason = reject_reason(x, center, verdict);
          fam.rejects.push_back({std::move(x), std::move(origin), verdict.offending, std::move(reason)});
        }
      }
      res.index_table.push_back(std::move(*idx));
    }
  }
  if (cert_degree > 0 && !fam.points.empty()) {
    auto pts = fam.point_list();
    fam.certificate = density_certificate(pts, cert_degree);
  }
  return res;
}

}  // namespace densepts
