#pragma once

#include "bqf/int128.hpp"

#include <utility>
#include <vector>

namespace bqf {

// prime-power factorization; primes strictly increasing, exponents >= 1,
// product of prime^exponent equals value
struct Factorization {
  u64 value = 1;
  std::vector<std::pair<u64, int>> factors;
};

bool is_prime(u64 n);

// trial division to 10^6, then deterministic Miller-Rabin + Brent rho.
// Rejects n = 0.
Factorization factorize(u64 n);

// all positive divisors of n, ascending
std::vector<u64> divisors(const Factorization &f);

std::vector<u64> primes_up_to(u64 limit);

// Kronecker symbol (a/n) for n >= 1, a arbitrary
int kronecker_symbol(i64 a, u64 n);

// (D/d) for a discriminant D (D = 0,1 mod 4 required) and d >= 1.
// Completely multiplicative in d; zero iff gcd(D,d) > 1.
int kronecker(i64 D, u64 d);

// sum over positive divisors d of |n| of kronecker(D, d); rejects n = 0.
// Nonnegative for fundamental D (it counts ideals of norm |n|).
i64 divisor_sum_chi(i64 D, i64 n);

// divisor count tau(|n|)
i64 divisor_count(i64 n);

} // namespace bqf
