#include "bqf/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bqf {

namespace {

constexpr u64 kTrialLimit = 1'000'000;

bool miller_rabin_witness(u64 n, u64 a, u64 d, int r) {
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < r; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return false;
  }
  return true; // a witnesses compositeness
}

u64 brent_rho(u64 n, u64 c) {
  // Brent's cycle variant of Pollard rho with fixed increment c
  u64 x = 2, y = 2, d = 1, q = 1, ys = y;
  u64 m = 128;
  auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
  for (u64 r = 1; d == 1; r <<= 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) y = f(y);
    for (u64 k = 0; k < r && d == 1; k += m) {
      ys = y;
      u64 lim = std::min(m, r - k);
      for (u64 i = 0; i < lim; ++i) {
        y = f(y);
        q = mulmod(q, x > y ? x - y : y - x, n);
      }
      d = std::gcd(q, n);
    }
  }
  if (d == n) {
    // backtrack one at a time
    d = 1;
    while (d == 1) {
      ys = f(ys);
      d = std::gcd(x > ys ? x - ys : ys - x, n);
    }
  }
  return d;
}

void factor_rec(u64 n, std::vector<u64> &primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  u64 d = n;
  for (u64 c = 1; d == n; ++c) d = brent_rho(n, c);
  factor_rec(d, primes);
  factor_rec(n / d, primes);
}

} // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // deterministic for all 64-bit n with this base set
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (miller_rabin_witness(n, a, d, r)) return false;
  }
  return true;
}

Factorization factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization out;
  out.value = n;
  auto push = [&](u64 p, int e) { out.factors.emplace_back(p, e); };
  for (u64 p : {2ULL, 3ULL, 5ULL}) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      push(p, e);
    }
  }
  // 6k+-1 wheel
  for (u64 p = 7; p <= kTrialLimit && p * p <= n; p += 6) {
    for (u64 q : {p, p + 4}) {
      if (n % q == 0) {
        int e = 0;
        while (n % q == 0) {
          n /= q;
          ++e;
        }
        push(q, e);
      }
    }
  }
  if (n > 1) {
    std::vector<u64> rest;
    factor_rec(n, rest);
    std::sort(rest.begin(), rest.end());
    for (size_t i = 0; i < rest.size();) {
      size_t j = i;
      while (j < rest.size() && rest[j] == rest[i]) ++j;
      push(rest[i], static_cast<int>(j - i));
      i = j;
    }
  }
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

std::vector<u64> divisors(const Factorization &f) {
  std::vector<u64> ds{1};
  for (const auto &[p, e] : f.factors) {
    size_t base = ds.size();
    u64 pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

std::vector<u64> primes_up_to(u64 limit) {
  std::vector<u64> out;
  if (limit < 2) return out;
  std::vector<bool> sieve(limit + 1, true);
  for (u64 i = 2; i <= limit; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) sieve[j] = false;
  }
  return out;
}

int kronecker_symbol(i64 a, u64 n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if ((n & 1) == 0) {
    if ((a & 1) == 0) return 0;
    int v = 0;
    while ((n & 1) == 0) {
      n >>= 1;
      ++v;
    }
    if (v & 1) {
      int am8 = static_cast<int>(((a % 8) + 8) % 8);
      if (am8 == 3 || am8 == 5) result = -result;
    }
  }
  // n odd from here; handle sign of a via (-1/n)
  if (a < 0) {
    if (n % 4 == 3) result = -result;
    a = -a;
  }
  u64 ua = static_cast<u64>(a) % n;
  while (ua != 0) {
    while ((ua & 1) == 0) {
      ua >>= 1;
      u64 nm8 = n & 7;
      if (nm8 == 3 || nm8 == 5) result = -result;
    }
    std::swap(ua, n);
    if ((ua & 3) == 3 && (n & 3) == 3) result = -result;
    ua %= n;
  }
  return n == 1 ? result : 0;
}

int kronecker(i64 D, u64 d) {
  i64 m4 = ((D % 4) + 4) % 4;
  if (m4 == 2 || m4 == 3) throw std::invalid_argument("kronecker: D must be 0 or 1 mod 4");
  if (d == 0) throw std::invalid_argument("kronecker: d must be positive");
  return kronecker_symbol(D, d);
}

i64 divisor_sum_chi(i64 D, i64 n) {
  if (n == 0) throw std::invalid_argument("divisor_sum_chi: n must be nonzero");
  u64 m = n < 0 ? static_cast<u64>(-(n + 1)) + 1 : static_cast<u64>(n);
  Factorization f = factorize(m);
  // multiplicative: local factor sum_{j<=e} chi(p)^j
  i64 out = 1;
  for (const auto &[p, e] : f.factors) {
    int chi = kronecker(D, p);
    if (chi == 1) {
      out *= (e + 1);
    } else if (chi == -1) {
      if (e & 1) return 0;
      // else factor 1
    }
    // chi == 0: factor 1
  }
  return out;
}

i64 divisor_count(i64 n) {
  if (n == 0) throw std::invalid_argument("divisor_count: n must be nonzero");
  u64 m = n < 0 ? static_cast<u64>(-(n + 1)) + 1 : static_cast<u64>(n);
  Factorization f = factorize(m);
  i64 out = 1;
  for (const auto &[p, e] : f.factors) out *= (e + 1);
  return out;
}

} // namespace bqf
