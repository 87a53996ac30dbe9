#include <algorithm>
#include <array>
#include <map>

#include "densepts/arith.hpp"
#include "densepts/errors.hpp"

namespace densepts {

namespace {

constexpr std::array<unsigned long, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// The first twelve prime bases are a deterministic Miller-Rabin witness set
// for every n < 3.317e24.
const Integer kDeterministicLimit("3317044064679887385961981", 10);

bool miller_rabin(const Integer& n, unsigned long base) {
  Integer d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  Integer x;
  Integer a = base;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

Integer pollard_brent(const Integer& n, unsigned long c) {
  Integer y = 2, x, ys, q = 1, g = 1;
  const unsigned long m = 128;
  unsigned long r = 1;
  auto f = [&](const Integer& v) -> Integer { return (v * v + c) % n; };
  do {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = f(y);
    unsigned long k = 0;
    do {
      ys = y;
      for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
        y = f(y);
        q = q * abs(x - y) % n;
      }
      g = gcd(q, n);
      k += m;
    } while (k < r && g == 1);
    r *= 2;
  } while (g == 1);
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd(abs(x - ys), n);
    } while (g == 1);
  }
  return g;
}

void split(const Integer& n, std::map<Integer, unsigned>& acc) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++acc[n];
    return;
  }
  Integer d = n;
  for (unsigned long c = 1; d == n; ++c) d = pollard_brent(n, c);
  split(d, acc);
  split(n / d, acc);
}

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  for (unsigned long p : kWitnesses) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  if (n >= kDeterministicLimit) return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
  return std::all_of(kWitnesses.begin(), kWitnesses.end(),
                     [&](unsigned long b) { return miller_rabin(n, b); });
}

Factorization factorize(const Integer& n) {
  if (n == 0) throw ArithmeticError("cannot factor zero");
  Factorization out;
  out.unit_sign = n < 0 ? -1 : 1;
  Integer rest = abs(n);
  std::map<Integer, unsigned> acc;

  constexpr unsigned long kTrialLimit = 1UL << 16;
  for (unsigned long p = 2; p < kTrialLimit; p += (p == 2 ? 1 : 2)) {
    if (rest == 1) break;
    if (Integer(p) * p > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      Integer prime = p;
      acc[prime] = static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), prime.get_mpz_t()));
    }
  }
  split(rest, acc);
  for (auto& [p, e] : acc) out.pairs.emplace_back(p, e);
  return out;
}

}  // namespace densepts
