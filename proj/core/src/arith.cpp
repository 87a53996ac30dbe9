#include "densepts/arith.hpp"

#include <algorithm>
#include <cstdlib>

#include "densepts/errors.hpp"

namespace densepts {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ArithmeticError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool is_decimal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Integer parse_integer(const std::string& text) {
  if (!is_decimal(text)) throw ArithmeticError("malformed integer '" + text + "'");
  std::string digits = text[0] == '+' ? text.substr(1) : text;
  return Integer(digits, 10);
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  return make_rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::string to_string(const Integer& x) { return x.get_str(10); }
std::string to_string(const Rational& x) { return x.get_str(10); }

Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent >= 0) {
    return make_rational(pow(base.get_num(), static_cast<unsigned long>(exponent)),
                         pow(base.get_den(), static_cast<unsigned long>(exponent)));
  }
  if (base == 0) throw ArithmeticError("negative power of zero");
  auto e = static_cast<unsigned long>(-exponent);
  return make_rational(pow(base.get_den(), e), pow(base.get_num(), e));
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer gcd_of(std::span<const Integer> values) {
  // Start from the smallest nonzero entry so the running gcd stays small and
  // each further step costs one reduction of a large operand.
  std::vector<const Integer*> order;
  order.reserve(values.size());
  for (const auto& v : values)
    if (v != 0) order.push_back(&v);
  std::sort(order.begin(), order.end(), [](const Integer* a, const Integer* b) {
    return mpz_sizeinbase(a->get_mpz_t(), 2) < mpz_sizeinbase(b->get_mpz_t(), 2);
  });
  Integer g = 0;
  for (const Integer* v : order) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v->get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Integer Factorization::value() const {
  Integer v = unit_sign;
  for (const auto& [p, e] : pairs) v *= pow(p, e);
  return v;
}

std::vector<Integer> prime_divisors(const Integer& n) {
  std::vector<Integer> out;
  for (auto& [p, e] : factorize(n).pairs) out.push_back(p);
  return out;
}

PlaceSet::PlaceSet(std::vector<Integer> primes) : primes_(std::move(primes)) {
  for (const auto& p : primes_)
    if (!is_prime(p)) throw ArithmeticError("place " + densepts::to_string(p) + " is not a prime");
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

PlaceSet::PlaceSet(std::initializer_list<long> primes)
    : PlaceSet(std::vector<Integer>(primes.begin(), primes.end())) {}

bool PlaceSet::contains(const Integer& p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

PlaceSet PlaceSet::unite(const PlaceSet& other) const {
  std::vector<Integer> all = primes_;
  all.insert(all.end(), other.primes_.begin(), other.primes_.end());
  return PlaceSet(std::move(all));
}

bool PlaceSet::is_subset_of(const PlaceSet& other) const {
  return std::all_of(primes_.begin(), primes_.end(), [&](const Integer& p) { return other.contains(p); });
}

std::string PlaceSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i) s += ",";
    s += densepts::to_string(primes_[i]);
  }
  return s + "}";
}

long valuation(const Integer& p, const Integer& x) {
  if (x == 0) throw ArithmeticError("valuation of zero undefined");
  if (p < 2) throw ArithmeticError("valuation at a non-prime");
  Integer rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

long valuation(const Integer& p, const Rational& x) {
  if (x == 0) throw ArithmeticError("valuation of zero undefined");
  return valuation(p, x.get_num()) - valuation(p, x.get_den());
}

Integer prime_to_s_part(const PlaceSet& S, const Integer& n) {
  if (n == 0) throw ArithmeticError("prime-to-S part of zero undefined");
  Integer r = abs(n);
  for (const auto& p : S.primes()) mpz_remove(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
  return r;
}

bool is_s_integer(const PlaceSet& S, const Rational& x) {
  return prime_to_s_part(S, x.get_den()) == 1;
}

bool is_s_unit(const PlaceSet& S, const Rational& x) {
  if (x == 0) return false;
  return prime_to_s_part(S, x.get_num()) == 1 && prime_to_s_part(S, x.get_den()) == 1;
}

Integer euler_phi_of_power(const Integer& m, unsigned e) {
  if (m < 1) throw ArithmeticError("euler_phi_of_power needs m >= 1");
  if (m == 1 || e == 0) return 1;
  Integer phi = 1;
  for (const auto& [q, k] : factorize(m).pairs) phi *= pow(q, k * e - 1) * (q - 1);
  return phi;
}

std::vector<std::vector<long>> exponent_vectors(std::size_t count, unsigned bound) {
  // Key order on a single exponent: 0, 1, -1, 2, -2, ...
  std::vector<long> keyed;
  keyed.push_back(0);
  for (long e = 1; e <= static_cast<long>(bound); ++e) {
    keyed.push_back(e);
    keyed.push_back(-e);
  }
  std::vector<std::vector<std::vector<long>>> by_grade(bound + 1);
  std::vector<std::size_t> idx(count, 0);
  while (true) {
    std::vector<long> v(count);
    long grade = 0;
    for (std::size_t i = 0; i < count; ++i) {
      v[i] = keyed[idx[i]];
      grade = std::max(grade, std::labs(v[i]));
    }
    by_grade[static_cast<std::size_t>(grade)].push_back(std::move(v));
    // odometer, last position fastest => lexicographic in key order
    std::size_t pos = count;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < keyed.size()) break;
      idx[pos] = 0;
      if (pos == 0) {
        pos = count + 1;
        break;
      }
    }
    if (count == 0 || pos == count + 1) break;
  }
  std::vector<std::vector<long>> out;
  for (auto& g : by_grade)
    for (auto& v : g) out.push_back(std::move(v));
  return out;
}

std::vector<Rational> s_unit_enumerator(const PlaceSet& S, unsigned exponent_bound) {
  std::vector<Rational> out;
  for (const auto& exps : exponent_vectors(S.size(), exponent_bound)) {
    Rational u = 1;
    for (std::size_t i = 0; i < exps.size(); ++i) u *= pow(Rational(S.primes()[i]), exps[i]);
    out.push_back(u);
    out.push_back(-u);
  }
  return out;
}

}  // namespace densepts
