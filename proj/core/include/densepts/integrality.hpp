#pragma once

// Reduction of points and configured components at primes, S-coprimality,
// the S-integral-point verdict and bad-prime sets.
//
// A linear component reduces at p to the span of its reduced basis rows. That
// model is valid outside component_bad_primes (the primes where the basis
// drops rank mod p); callers enlarge S to cover them.

#include <cstddef>
#include <string>
#include <vector>

#include "densepts/arith.hpp"
#include "densepts/projective.hpp"

namespace densepts {

/// Coordinates of a primitive representative modulo p. Never the zero vector.
struct ReducedPoint {
  Integer p;
  IntVector residues;

  /// Projective equality over F_p.
  bool same_point(const ReducedPoint& other) const;
};

ReducedPoint reduce_point(const ProjPoint& x, const Integer& p);

/// One piece of failure evidence: the point reduces onto `component` at
/// `prime`. prime == 0 means the point lies on the component over Q.
struct Offense {
  Integer prime;
  std::size_t component = 0;

  friend bool operator==(const Offense&, const Offense&) = default;
};

struct IntegralityVerdict {
  bool integral = true;
  std::vector<Offense> offending;  // sorted by (component, prime); empty iff integral
};

enum class BadPrimeReason { content, discriminant, span_degeneration };
std::string to_string(BadPrimeReason r);

struct BadPrimeReport {
  struct Entry {
    Integer prime;
    BadPrimeReason reason;
    std::size_t component = 0;
  };
  std::vector<Entry> entries;  // sorted by prime

  /// Distinct primes, ascending.
  std::vector<Integer> primes() const;
  void add(const Integer& prime, BadPrimeReason reason, std::size_t component);
  void merge(const BadPrimeReport& other);
  bool empty() const { return entries.empty(); }
};

/// True iff prime_to_s_part(S, pair_minor_gcd(A, B)) == 1. Throws on A == B.
bool s_coprime(const ProjPoint& A, const ProjPoint& B, const PlaceSet& S);

/// Primes where the stored model of the component stops presenting its true
/// reduction: for a linear subspace, primes dividing every maximal minor of the
/// span; empty for a hypersurface given by a primitive form.
BadPrimeReport component_bad_primes(const Component& c, std::size_t index = 0);

/// Does x reduce onto c at p? Throws ArithmeticError when p is a bad prime of c.
bool reduces_to_component(const ProjPoint& x, const Component& c, const Integer& p);

/// Exact verdict over every prime outside S. Requires every component's bad
/// primes to lie in S (throws HypothesisError otherwise).
IntegralityVerdict is_integral_point(const ProjPoint& x, const DivisorConfig& D, const PlaceSet& S);

/// Bad primes of the line AB against every component of D: content and
/// discriminant primes of each restricted hypersurface form, and rank-drop
/// primes of each linear component stacked with A and B.
/// Throws HypothesisError("line inside divisor") if a component contains AB.
BadPrimeReport line_divisor_bad_primes(const ProjPoint& A, const ProjPoint& B, const DivisorConfig& D);

/// S together with every prime of every numerator/denominator of `required`
/// and every report prime. Throws ArithmeticError on a zero required value.
PlaceSet enlarge_S(const PlaceSet& S, const std::vector<Rational>& required,
                   const std::vector<BadPrimeReport>& reports);

}  // namespace densepts
