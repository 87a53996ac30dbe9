#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "densepts/arith.hpp"
#include "densepts/errors.hpp"

using namespace densepts;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

std::vector<std::pair<long, unsigned>> trial_division(long n) {
  std::vector<std::pair<long, unsigned>> out;
  n = std::abs(n);
  for (long p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

long brute_phi(long m) {
  long c = 0;
  for (long i = 1; i <= m; ++i)
    if (std::gcd(i, m) == 1) ++c;
  return c;
}

}  // namespace

TEST(Valuation, Examples) {
  EXPECT_EQ(valuation(Integer(2), q(24)), 3);
  EXPECT_EQ(valuation(Integer(5), q(7, 25)), -2);
  EXPECT_EQ(valuation(Integer(7), q(13)), 0);
  EXPECT_THROW(valuation(Integer(3), q(0)), ArithmeticError);
}

TEST(Valuation, Multiplicative) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-5000, 5000);
  for (int i = 0; i < 300; ++i) {
    long a = d(rng), b = d(rng), c = d(rng), e = d(rng);
    if (!a || !b || !c || !e) continue;
    Rational x = q(a, std::abs(b)), y = q(c, std::abs(e));
    for (long p : {2L, 3L, 5L, 7L, 101L})
      EXPECT_EQ(valuation(Integer(p), Rational(x * y)), valuation(Integer(p), x) + valuation(Integer(p), y));
  }
}

TEST(SIntegers, Examples) {
  EXPECT_TRUE(is_s_integer({2, 3}, q(5, 6)));
  EXPECT_FALSE(is_s_integer({2}, q(1, 3)));
  EXPECT_TRUE(is_s_integer(PlaceSet{}, q(0)));
  EXPECT_TRUE(is_s_unit({2, 3}, q(-8, 9)));
  EXPECT_FALSE(is_s_unit({2, 3}, q(5)));
  EXPECT_TRUE(is_s_unit({2, 3}, q(1)));
  EXPECT_FALSE(is_s_unit({2, 3}, q(0)));
}

TEST(SIntegers, UnitIffIntegerBothWays) {
  PlaceSet S{2, 5};
  for (long n = -60; n <= 60; ++n)
    for (long d = 1; d <= 40; ++d) {
      if (n == 0) continue;
      Rational x = q(n, d);
      Rational inv = 1 / x;
      EXPECT_EQ(is_s_unit(S, x), is_s_integer(S, x) && is_s_integer(S, inv)) << n << "/" << d;
    }
}

TEST(PrimeToS, Examples) {
  EXPECT_EQ(prime_to_s_part({2, 3}, Integer(360)), 5);
  EXPECT_EQ(prime_to_s_part({2, 3}, Integer(-8)), 1);
  EXPECT_EQ(prime_to_s_part(PlaceSet{}, Integer(30)), 30);
  EXPECT_THROW(prime_to_s_part({2}, Integer(0)), ArithmeticError);
}

TEST(PrimeToS, AgreesWithTrialDivision) {
  PlaceSet S{2, 3, 7};
  for (long n = 1; n < 3000; n += 7) {
    long expect = 1;
    for (auto [p, e] : trial_division(n))
      if (p != 2 && p != 3 && p != 7)
        for (unsigned i = 0; i < e; ++i) expect *= p;
    EXPECT_EQ(prime_to_s_part(S, Integer(n)), expect);
    EXPECT_EQ(prime_to_s_part(S, Integer(-n)), expect);
  }
}

TEST(Factorize, AgreesWithTrialDivision) {
  for (long n = 2; n < 5000; ++n) {
    auto f = factorize(Integer(n));
    auto expect = trial_division(n);
    ASSERT_EQ(f.pairs.size(), expect.size()) << n;
    for (std::size_t i = 0; i < expect.size(); ++i) {
      EXPECT_EQ(f.pairs[i].first, expect[i].first);
      EXPECT_EQ(f.pairs[i].second, expect[i].second);
    }
    EXPECT_EQ(f.value(), n);
  }
}

TEST(Factorize, LargeSemiprimes) {
  Integer p("1000000007"), r("998244353"), big("2305843009213693951");
  auto f = factorize(p * r * r);
  ASSERT_EQ(f.pairs.size(), 2u);
  EXPECT_EQ(f.pairs[0].first, r);
  EXPECT_EQ(f.pairs[0].second, 2u);
  EXPECT_EQ(f.pairs[1].first, p);
  EXPECT_TRUE(is_prime(big));
  EXPECT_FALSE(is_prime(Integer("3215031751")));  // strong pseudoprime to bases 2, 3, 5, 7
  auto g = factorize(-big * 6);
  EXPECT_EQ(g.unit_sign, -1);
  EXPECT_EQ(g.value(), -big * 6);
}

TEST(EulerPhi, Examples) {
  EXPECT_EQ(euler_phi_of_power(Integer(7), 1), 6);
  EXPECT_EQ(euler_phi_of_power(Integer(4), 3), 32);
  EXPECT_EQ(euler_phi_of_power(Integer(1), 5), 1);
}

TEST(EulerPhi, BruteForce) {
  for (long m = 1; m <= 60; ++m)
    for (unsigned e = 1; e <= 3; ++e) {
      long me = 1;
      for (unsigned i = 0; i < e; ++i) me *= m;
      if (me > 200000) continue;
      EXPECT_EQ(euler_phi_of_power(Integer(m), e), brute_phi(me)) << m << "^" << e;
    }
}

TEST(Enumerator, Examples) {
  auto one = s_unit_enumerator({2}, 1);
  std::vector<Rational> expect{q(1), q(-1), q(2), q(-2), q(1, 2), q(-1, 2)};
  EXPECT_EQ(one, expect);
  auto none = s_unit_enumerator(PlaceSet{}, 5);
  EXPECT_EQ(none, (std::vector<Rational>{q(1), q(-1)}));
  auto two = s_unit_enumerator({2, 3}, 1);
  EXPECT_EQ(two.size(), 18u);
  for (auto v : {q(6), q(2, 3), q(-3, 2)}) EXPECT_NE(std::find(two.begin(), two.end(), v), two.end());
}

TEST(Enumerator, ExhaustiveAgainstBruteForce) {
  PlaceSet S{2, 3, 5};
  const unsigned bound = 2;
  std::set<Rational> expect;
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b)
      for (long c = -2; c <= 2; ++c) {
        Rational v = pow(Rational(2), a) * pow(Rational(3), b) * pow(Rational(5), c);
        expect.insert(v);
        expect.insert(-v);
      }
  auto got = s_unit_enumerator(S, bound);
  std::set<Rational> got_set(got.begin(), got.end());
  EXPECT_EQ(got_set.size(), got.size());
  EXPECT_EQ(got_set, expect);
  for (const auto& u : got) {
    EXPECT_TRUE(is_s_unit(S, u));
    EXPECT_TRUE(got_set.count(-u));
  }
}

TEST(Enumerator, GradedOrder) {
  auto v = s_unit_enumerator({2, 3}, 3);
  long prev = 0;
  for (const auto& u : v) {
    long m = std::max(std::abs(valuation(Integer(2), u)), std::abs(valuation(Integer(3), u)));
    EXPECT_GE(m, prev);
    prev = m;
  }
  auto e = exponent_vectors(2, 1);
  ASSERT_EQ(e.size(), 9u);
  EXPECT_EQ(e[0], (std::vector<long>{0, 0}));
  EXPECT_EQ(e[1], (std::vector<long>{0, 1}));
  EXPECT_EQ(e[2], (std::vector<long>{0, -1}));
  EXPECT_EQ(e[3], (std::vector<long>{1, 0}));
}

TEST(PlaceSetTest, NormalizesAndRejects) {
  PlaceSet S(std::vector<Integer>{7, 2, 7, 3});
  EXPECT_EQ(S.to_string(), "{2,3,7}");
  EXPECT_THROW(PlaceSet({4}), ArithmeticError);
  EXPECT_TRUE(PlaceSet({2}).is_subset_of(S));
  EXPECT_EQ(PlaceSet({2, 5}).unite(S), PlaceSet({2, 3, 5, 7}));
}

TEST(Parsing, RationalsAndIntegers) {
  EXPECT_EQ(parse_rational("-6/4"), q(-3, 2));
  EXPECT_EQ(to_string(parse_rational("10/5")), "2");
  EXPECT_EQ(parse_integer("-123456789012345678901234567890"), Integer("-123456789012345678901234567890"));
  EXPECT_THROW(parse_rational("1/0"), ArithmeticError);
  EXPECT_THROW(parse_rational("abc"), ArithmeticError);
  EXPECT_THROW(parse_integer("1.5"), ArithmeticError);
}

TEST(Modular, PowAndMod) {
  EXPECT_EQ(mod(Integer(-7), Integer(5)), 3);
  EXPECT_EQ(pow(Integer(3), 5), 243);
  EXPECT_EQ(pow(q(2, 3), -2), q(9, 4));
  std::vector<Integer> v{Integer(12), Integer(-18), Integer(0)};
  EXPECT_EQ(gcd_of(v), 6);
  EXPECT_EQ(gcd_of(std::vector<Integer>{}), 0);
}
