#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bqf/numtheory.hpp"
#include "oracles.hpp"

#include <numeric>

using namespace bqf;

TEST_CASE("factorize basics") {
  CHECK(factorize(1).factors.empty());

  auto f12 = factorize(12);
  REQUIRE(f12.factors.size() == 2);
  CHECK(f12.factors[0] == std::pair<u64, int>{2, 2});
  CHECK(f12.factors[1] == std::pair<u64, int>{3, 1});

  // primality of 9999991 decided against trial division
  bool trial_prime = true;
  for (u64 d = 2; d * d <= 9999991ULL; ++d)
    if (9999991ULL % d == 0) {
      trial_prime = false;
      break;
    }
  auto f = factorize(9999991ULL);
  CHECK(trial_prime == (f.factors.size() == 1 && f.factors[0].second == 1 &&
                        f.factors[0].first == 9999991ULL));

  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize reconstructs its input") {
  for (u64 n : {2ULL, 97ULL, 1024ULL, 600851475143ULL, 10403ULL, 2305843009213693951ULL,
                9007199254740991ULL, 123456789012345678ULL}) {
    auto f = factorize(n);
    u64 prod = 1;
    u64 prev = 0;
    for (auto [p, e] : f.factors) {
      CHECK(is_prime(p));
      CHECK(p > prev);
      CHECK(e >= 1);
      prev = p;
      for (int i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == n);
  }
}

TEST_CASE("kronecker examples and validation") {
  CHECK(kronecker(-4, 2) == 0);
  CHECK(kronecker(-4, 5) == 1);
  CHECK(kronecker(8, 7) == 1);
  CHECK_THROWS_AS(kronecker(-5, 3), std::invalid_argument); // -5 = 3 mod 4
  CHECK_THROWS_AS(kronecker(6, 5), std::invalid_argument);
  CHECK_THROWS_AS(kronecker(5, 0), std::invalid_argument);
}

TEST_CASE("kronecker agrees with the quadratic-residue oracle at odd primes") {
  for (i64 D : {-3, -4, -7, -8, -11, -20, 5, 8, 13, 12, 17, 21, 40}) {
    for (u64 p : primes_up_to(500)) {
      if (p == 2) continue;
      CHECK(kronecker(D, p) == oracle::legendre_qr(D, p));
    }
  }
}

TEST_CASE("kronecker is completely multiplicative in d") {
  for (i64 D : {-4, 5, -3, 13, 60}) {
    for (u64 d1 = 1; d1 <= 100; d1 += 7)
      for (u64 d2 = 1; d2 <= 10000; d2 += 101)
        CHECK(kronecker(D, d1 * d2) == kronecker(D, d1) * kronecker(D, d2));
  }
}

TEST_CASE("kronecker vanishes exactly on gcd(D,d) > 1") {
  for (i64 D : {-4, 12, 5, -11}) {
    for (u64 d = 1; d <= 300; ++d) {
      bool coprime = std::gcd(static_cast<u64>(D < 0 ? -D : D), d) == 1;
      CHECK((kronecker(D, d) != 0) == coprime);
    }
  }
}

TEST_CASE("divisor_sum_chi examples") {
  CHECK(divisor_sum_chi(-4, 1) == 1);
  CHECK(divisor_sum_chi(5, 1) == 1);
  CHECK(divisor_sum_chi(-4, 5) == 2);
  CHECK(divisor_sum_chi(-4, 9) == 1);
  CHECK_THROWS_AS(divisor_sum_chi(-4, 0), std::invalid_argument);
}

TEST_CASE("divisor_sum_chi equals explicit divisor enumeration") {
  for (i64 D : {-3, -4, -8, 5, 8, 13}) {
    for (i64 n = 1; n <= 2000; ++n) {
      CHECK(divisor_sum_chi(D, n) == oracle::divisor_sum_chi_enum(D, n));
      CHECK(divisor_sum_chi(D, -n) == divisor_sum_chi(D, n));
    }
  }
}

TEST_CASE("divisor_sum_chi is multiplicative on coprime arguments coprime to D") {
  for (i64 D : {-4, 5, -8}) {
    for (i64 m = 1; m <= 60; ++m)
      for (i64 n = 1; n <= 60; ++n) {
        if (std::gcd(m, n) != 1) continue;
        i64 aD = D < 0 ? -D : D;
        if (std::gcd(m, aD) != 1 || std::gcd(n, aD) != 1) continue;
        CHECK(divisor_sum_chi(D, m * n) == divisor_sum_chi(D, m) * divisor_sum_chi(D, n));
      }
  }
}

TEST_CASE("divisor_sum_chi is nonnegative for fundamental discriminants") {
  for (i64 D : {-3, -4, -7, -8, -11, 5, 8, 13}) {
    for (i64 n = 1; n <= 100000; ++n) CHECK(divisor_sum_chi(D, n) >= 0);
  }
}

TEST_CASE("isqrt exactness") {
  for (u64 n = 0; n <= 20000; ++n) {
    u64 r = isqrt(n);
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
  }
  u64 big = 0xFFFFFFFFFFFFFFFFULL;
  CHECK(isqrt(big) == 4294967295ULL);
  u128 huge = static_cast<u128>(big) * big;
  CHECK(isqrt_u128(huge) == big);
  CHECK(isqrt_u128(huge - 1) == big - 1);
}
