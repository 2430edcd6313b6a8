// Test-only reference implementations. Each one is deliberately independent
// of the library code path it is used to check: brute-force searches and
// direct enumerations only.
#pragma once

#include "bqf/forms.hpp"
#include "bqf/int128.hpp"
#include "bqf/numtheory.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace oracle {

using bqf::i128;
using bqf::i64;
using bqf::u128;
using bqf::u64;

// Legendre symbol (D/p) for an odd prime p, by searching x^2 = D (mod p)
inline int legendre_qr(i64 D, u64 p) {
  i64 r = ((D % static_cast<i64>(p)) + static_cast<i64>(p)) % static_cast<i64>(p);
  if (r == 0) return 0;
  for (u64 x = 1; x < p; ++x)
    if (x * x % p == static_cast<u64>(r)) return 1;
  return -1;
}

// sum_{d | n} chi_D(d) by explicit divisor enumeration
inline i64 divisor_sum_chi_enum(i64 D, i64 n) {
  u64 m = static_cast<u64>(n < 0 ? -n : n);
  i64 sum = 0;
  for (u64 d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    sum += bqf::kronecker(D, d);
    if (d != m / d) sum += bqf::kronecker(D, m / d);
  }
  return sum;
}

// minimal (t,u) with t^2 - D u^2 = 4 by trying u = 1, 2, ...
inline std::optional<std::pair<i64, i64>> pell_bruteforce(i64 D, i64 u_max) {
  for (i64 u = 1; u <= u_max; ++u) {
    i128 tt = static_cast<i128>(D) * u * u + 4;
    u128 t;
    if (bqf::is_square(tt, &t)) return std::make_pair(static_cast<i64>(t), u);
  }
  return std::nullopt;
}

// All integer solutions of f(x,y) = n, indefinite f, grouped by n for
// 1 <= n <= n_max, restricted to |x| <= x_max, |y| <= y_max. Enumerates by
// x via u = 2cy + bx, u^2 = D x^2 + 4 c f; cost O(x_max log) rather than
// O(x_max * y_max).
inline std::vector<std::vector<std::pair<i64, i64>>> solutions_by_value(const bqf::QuadForm &f,
                                                                        i64 n_max, i64 x_max,
                                                                        i64 y_max) {
  std::vector<std::vector<std::pair<i64, i64>>> by_n(static_cast<size_t>(n_max) + 1);
  const i64 b = f.b, c = f.c;
  for (i64 x = -x_max; x <= x_max; ++x) {
    i128 base = static_cast<i128>(f.D) * x * x;
    i128 hi = base + 4 * static_cast<i128>(c);         // f = 1
    i128 lo = base + 4 * static_cast<i128>(c) * n_max; // f = n_max
    if (hi < 0) continue;
    u128 uhi = bqf::isqrt_u128(static_cast<u128>(hi));
    u128 ulo = 0;
    if (lo > 0) ulo = bqf::isqrt_u128(static_cast<u128>(lo - 1)) + 1;
    for (u128 uu = ulo; uu <= uhi; ++uu) {
      for (int sign = 0; sign < (uu == 0 ? 1 : 2); ++sign) {
        i128 u = sign == 0 ? static_cast<i128>(uu) : -static_cast<i128>(uu);
        i128 num = u - static_cast<i128>(b) * x;
        if (num % (2 * static_cast<i128>(c)) != 0) continue;
        i128 y = num / (2 * static_cast<i128>(c));
        if (y < -y_max || y > y_max) continue;
        i128 n = f.eval(x, y);
        if (n < 1 || n > n_max) continue;
        by_n[static_cast<size_t>(n)].emplace_back(x, static_cast<i64>(y));
      }
    }
  }
  return by_n;
}

// all-solution count of a positive definite form by rectangle scan
inline i64 definite_solutions_rect(const bqf::QuadForm &f, i64 n) {
  if (n <= 0) return 0;
  // 4a f = (2ax+by)^2 - D y^2 and 4c f = (2cy+bx)^2 - D x^2 bound both axes
  i64 xb = static_cast<i64>(bqf::isqrt_u128(static_cast<u128>(4 * static_cast<i128>(f.c) * n /
                                                              (-f.D)))) +
           1;
  i64 yb = static_cast<i64>(bqf::isqrt_u128(static_cast<u128>(4 * static_cast<i128>(f.a) * n /
                                                              (-f.D)))) +
           1;
  i64 count = 0;
  for (i64 x = -xb; x <= xb; ++x)
    for (i64 y = -yb; y <= yb; ++y)
      if (f.eval(x, y) == n) ++count;
  return count;
}

} // namespace oracle
