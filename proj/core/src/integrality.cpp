#include "densepts/integrality.hpp"

#include <algorithm>
#include <set>

#include "densepts/errors.hpp"

namespace densepts {

bool ReducedPoint::same_point(const ReducedPoint& other) const {
  if (p != other.p || residues.size() != other.residues.size()) return false;
  for (std::size_t i = 0; i < residues.size(); ++i)
    for (std::size_t j = i + 1; j < residues.size(); ++j)
      if (mod(residues[i] * other.residues[j] - residues[j] * other.residues[i], p) != 0) return false;
  return true;
}

ReducedPoint reduce_point(const ProjPoint& x, const Integer& p) {
  ReducedPoint r{p, {}};
  r.residues.reserve(x.size());
  for (const auto& c : x.coords()) r.residues.push_back(mod(c, p));
  return r;
}

std::string to_string(BadPrimeReason r) {
  switch (r) {
    case BadPrimeReason::content: return "content";
    case BadPrimeReason::discriminant: return "discriminant";
    case BadPrimeReason::span_degeneration: return "span-degeneration";
  }
  return "unknown";
}

std::vector<Integer> BadPrimeReport::primes() const {
  std::vector<Integer> out;
  for (const auto& e : entries) out.push_back(e.prime);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void BadPrimeReport::add(const Integer& prime, BadPrimeReason reason, std::size_t component) {
  for (const auto& e : entries)
    if (e.prime == prime && e.reason == reason && e.component == component) return;
  entries.push_back({prime, reason, component});
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.prime < b.prime; });
}

void BadPrimeReport::merge(const BadPrimeReport& other) {
  for (const auto& e : other.entries) add(e.prime, e.reason, e.component);
}

bool s_coprime(const ProjPoint& A, const ProjPoint& B, const PlaceSet& S) {
  Integer g = pair_minor_gcd(A, B);
  if (g == 0) throw ArithmeticError("coprimality undefined for equal points");
  return prime_to_s_part(S, g) == 1;
}

namespace {

// gcd of the maximal minors of a linear component's span; a prime divides it
// iff the span rows become dependent mod that prime.
Integer span_degeneracy(const LinearSubspace& M) { return maximal_minor_gcd(M.span()); }

// The quantity whose prime divisors are exactly the primes at which x reduces
// onto c: F(x) for a hypersurface, the stacked minor gcd for a subspace.
Integer reduction_witness(const ProjPoint& x, const Component& c) {
  if (auto* f = std::get_if<HomForm>(&c)) return evaluate_form(*f, x);
  return stacked_minor_gcd(std::get<LinearSubspace>(c), x);
}

}  // namespace

BadPrimeReport component_bad_primes(const Component& c, std::size_t index) {
  BadPrimeReport report;
  if (auto* m = std::get_if<LinearSubspace>(&c)) {
    Integer g = span_degeneracy(*m);
    if (g != 1)
      for (const auto& p : prime_divisors(g)) report.add(p, BadPrimeReason::span_degeneration, index);
  }
  return report;
}

bool reduces_to_component(const ProjPoint& x, const Component& c, const Integer& p) {
  if (!is_prime(p)) throw ArithmeticError(to_string(p) + " is not a prime");
  if (ambient_dimension(c) != x.ambient_dimension()) throw DimensionError("point and component live in different spaces");
  if (auto* m = std::get_if<LinearSubspace>(&c)) {
    if (mpz_divisible_p(span_degeneracy(*m).get_mpz_t(), p.get_mpz_t()))
      throw ArithmeticError("reduction model invalid at p = " + to_string(p));
  }
  Integer w = reduction_witness(x, c);
  return mpz_divisible_p(w.get_mpz_t(), p.get_mpz_t()) != 0;
}

IntegralityVerdict is_integral_point(const ProjPoint& x, const DivisorConfig& D, const PlaceSet& S) {
  if (x.ambient_dimension() != D.ambient_dimension())
    throw DimensionError("point and configuration live in different spaces");
  IntegralityVerdict verdict;
  for (std::size_t i = 0; i < D.size(); ++i) {
    const Component& c = D.components()[i];
    if (auto* m = std::get_if<LinearSubspace>(&c)) {
      Integer g = span_degeneracy(*m);
      if (prime_to_s_part(S, g) != 1)
        throw HypothesisError("component " + std::to_string(i) + " has bad primes outside S = " + S.to_string() +
                              "; enlarge S first");
    }
    Integer w = reduction_witness(x, c);
    if (w == 0) {
      verdict.offending.push_back({Integer(0), i});
      continue;
    }
    Integer rest = prime_to_s_part(S, w);
    if (rest == 1) continue;
    for (const auto& p : prime_divisors(rest)) verdict.offending.push_back({p, i});
  }
  verdict.integral = verdict.offending.empty();
  return verdict;
}

BadPrimeReport line_divisor_bad_primes(const ProjPoint& A, const ProjPoint& B, const DivisorConfig& D) {
  if (A == B) throw ArithmeticError("a line needs two distinct points");
  BadPrimeReport report;
  for (std::size_t i = 0; i < D.size(); ++i) {
    const Component& c = D.components()[i];
    if (auto* f = std::get_if<HomForm>(&c)) {
      BinaryForm q = restrict_to_line(*f, A, B);
      if (q.is_zero())
        throw HypothesisError("line inside divisor: component " + std::to_string(i) + " " + describe(c) +
                              " contains the line through " + A.to_string() + " and " + B.to_string());
      Integer content = q.content();
      if (content != 1)
        for (const auto& p : prime_divisors(content)) report.add(p, BadPrimeReason::content, i);
      BinaryForm sq = q.squarefree_part();
      if (sq.degree >= 2) {
        Integer disc = sq.discriminant();
        if (disc != 1 && disc != -1)
          for (const auto& p : prime_divisors(disc)) report.add(p, BadPrimeReason::discriminant, i);
      }
      continue;
    }
    const auto& m = std::get<LinearSubspace>(c);
    report.merge(component_bad_primes(c, i));
    IntMatrix stacked = m.span();
    stacked.push_back(A.coords());
    stacked.push_back(B.coords());
    const std::size_t r = rank(stacked);
    if (r == m.span().size())
      throw HypothesisError("line inside divisor: component " + std::to_string(i) + " " + describe(c) +
                            " contains the line through " + A.to_string() + " and " + B.to_string());
    // the intersection of the line with M changes mod p exactly where the
    // stacked rank drops
    auto all = minors(stacked, r);
    Integer g = gcd_of(all);
    if (g != 1)
      for (const auto& p : prime_divisors(g)) report.add(p, BadPrimeReason::span_degeneration, i);
  }
  return report;
}

PlaceSet enlarge_S(const PlaceSet& S, const std::vector<Rational>& required,
                   const std::vector<BadPrimeReport>& reports) {
  std::vector<Integer> primes = S.primes();
  for (const auto& x : required) {
    if (x == 0) throw ArithmeticError("cannot make 0 an S-unit");
    for (const Integer* part : {&x.get_num(), &x.get_den()}) {
      if (abs(*part) == 1) continue;
      for (const auto& p : prime_divisors(*part)) primes.push_back(p);
    }
  }
  for (const auto& r : reports)
    for (const auto& p : r.primes()) primes.push_back(p);
  return PlaceSet(std::move(primes));
}

}  // namespace densepts
