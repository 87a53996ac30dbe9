#pragma once

// Exact arithmetic over Q: valuations, S-integers and S-units.
//
// Integers and rationals are GMP values. A Rational is always kept in
// canonical form (reduced, positive denominator); every function in this
// header that builds one canonicalizes before returning.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace densepts {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws ArithmeticError on den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Parses "a" or "a/b" (decimal). Throws ArithmeticError on malformed input.
Rational parse_rational(const std::string& text);
Integer parse_integer(const std::string& text);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

/// Deterministic Miller-Rabin below 3.3e24; BPSW-backed GMP test above.
bool is_prime(const Integer& n);

struct Factorization {
  int unit_sign = 1;
  std::vector<std::pair<Integer, unsigned>> pairs;  // primes strictly ascending

  Integer value() const;
};

/// Full factorization of a nonzero integer (trial division, then Pollard-Brent).
Factorization factorize(const Integer& n);

/// Distinct prime divisors of |n|, ascending. n must be nonzero.
std::vector<Integer> prime_divisors(const Integer& n);

/// The finite part of S: a sorted, duplicate-free list of rational primes.
class PlaceSet {
 public:
  PlaceSet() = default;
  /// Sorts and deduplicates; throws ArithmeticError if an entry is not prime.
  explicit PlaceSet(std::vector<Integer> primes);
  PlaceSet(std::initializer_list<long> primes);

  const std::vector<Integer>& primes() const { return primes_; }
  bool contains(const Integer& p) const;
  bool empty() const { return primes_.empty(); }
  std::size_t size() const { return primes_.size(); }

  PlaceSet unite(const PlaceSet& other) const;
  bool is_subset_of(const PlaceSet& other) const;

  std::string to_string() const;  // "{2,3,5}"

  friend bool operator==(const PlaceSet&, const PlaceSet&) = default;

 private:
  std::vector<Integer> primes_;
};

/// v_p(x) for x != 0. Throws ArithmeticError("valuation of zero undefined").
long valuation(const Integer& p, const Rational& x);
long valuation(const Integer& p, const Integer& x);

bool is_s_integer(const PlaceSet& S, const Rational& x);
bool is_s_unit(const PlaceSet& S, const Rational& x);

/// Largest positive divisor of |n| coprime to S. Throws on n == 0.
Integer prime_to_s_part(const PlaceSet& S, const Integer& n);

/// phi(m^e); 1 when m == 1.
Integer euler_phi_of_power(const Integer& m, unsigned e);

/// Every +-prod p_i^{e_i} with |e_i| <= bound, graded by max |e_i|, then
/// lexicographic in the exponent vector under the key order 0, 1, -1, 2, -2, ...,
/// with the positive sign before the negative one.
std::vector<Rational> s_unit_enumerator(const PlaceSet& S, unsigned exponent_bound);

/// Exponent vectors in the same order as s_unit_enumerator (one per sign pair).
std::vector<std::vector<long>> exponent_vectors(std::size_t count, unsigned bound);

Integer pow(const Integer& base, unsigned long exponent);
Rational pow(const Rational& base, long exponent);

/// Non-negative residue of a modulo m (m > 0).
Integer mod(const Integer& a, const Integer& m);

Integer gcd(const Integer& a, const Integer& b);
/// gcd of |values|; 0 for an empty or all-zero list. Accumulates small-first.
Integer gcd_of(std::span<const Integer> values);

}  // namespace densepts
