#include "densepts/constructions.hpp"
#include "densepts/errors.hpp"

namespace densepts {

namespace {

std::string component_label(const DivisorConfig& D, std::size_t i) {
  return "component " + std::to_string(i) + " " + describe(D.components()[i]);
}

// The line AB may meet each component only at A or B.
void check_meets_only_endpoints(const ProjPoint& A, const ProjPoint& B, const DivisorConfig& D) {
  const std::string line = "line through " + A.to_string() + " and " + B.to_string();
  for (std::size_t i = 0; i < D.size(); ++i) {
    const Component& c = D.components()[i];
    if (auto* f = std::get_if<HomForm>(&c)) {
      BinaryForm q = restrict_to_line(*f, A, B);
      if (q.is_zero()) throw HypothesisError("line inside divisor: " + component_label(D, i) + " contains the " + line);
      if (!q.is_monomial())
        throw HypothesisError("the " + line + " meets " + component_label(D, i) + " outside {A, B}");
      continue;
    }
    const auto& m = std::get<LinearSubspace>(c);
    IntMatrix stacked = m.span();
    stacked.push_back(A.coords());
    stacked.push_back(B.coords());
    const std::size_t k = m.span().size();
    const std::size_t r = rank(stacked);
    if (r == k) throw HypothesisError("line inside divisor: " + component_label(D, i) + " contains the " + line);
    if (r == k + 1 && stacked_minor_gcd(m, A) != 0 && stacked_minor_gcd(m, B) != 0)
      throw HypothesisError("the " + line + " meets " + component_label(D, i) + " outside {A, B}");
  }
}

}  // namespace

GeneratedFamily beukers_family(const ProjPoint& A, const ProjPoint& B, const DivisorConfig& D, const PlaceSet& S,
                               unsigned unit_bound, unsigned cert_degree) {
  if (A.size() != B.size() || A.ambient_dimension() != D.ambient_dimension())
    throw DimensionError("points and configuration live in different spaces");
  if (A == B) throw HypothesisError("A and B must be distinct points");
  if (S.empty()) throw HypothesisError("S contains no finite prime: the S-unit group is finite");
  check_meets_only_endpoints(A, B, D);
  if (!s_coprime(A, B, S)) {
    Integer rest = prime_to_s_part(S, pair_minor_gcd(A, B));
    std::string primes;
    for (const auto& p : prime_divisors(rest)) primes += (primes.empty() ? "" : ",") + to_string(p);
    throw HypothesisError("A = " + A.to_string() + " and B = " + B.to_string() +
                          " are not S-coprime: they meet modulo {" + primes + "}");
  }
  BadPrimeReport bad = line_divisor_bad_primes(A, B, D);
  for (const auto& e : bad.entries)
    if (!S.contains(e.prime))
      throw HypothesisError("bad prime " + to_string(e.prime) + " (" + to_string(e.reason) + ", " +
                            component_label(D, e.component) + ") lies outside S = " + S.to_string());

  GeneratedFamily fam;
  fam.label = "beukers";
  fam.S = S;
  RatVector raw(A.size());
  for (const auto& u : s_unit_enumerator(S, unit_bound)) {
    for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = u * A[i] + B[i];
    ++fam.generated;
    PointOrigin origin;
    origin.units.push_back(u);
    ProjPoint x = normalize_primitive(raw);
    auto verdict = is_integral_point(x, D, S);
    if (verdict.integral)
      fam.points.push_back({std::move(x), std::move(origin), std::move(verdict)});
    else
      fam.rejects.push_back({std::move(x), std::move(origin), verdict.offending, "unit family point reduces onto D"});
  }
  if (cert_degree > 0 && !fam.points.empty()) {
    auto pts = fam.point_list();
    fam.certificate = density_certificate(pts, cert_degree);
  }
  return fam;
}

}  // namespace densepts
