#include "bqf/int128.hpp"

#include <cmath>
#include <stdexcept>

namespace bqf {

u64 isqrt(u64 n) {
  if (n == 0) return 0;
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  // correct the floating estimate; off by at most a couple of ulps
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

u128 isqrt_u128(u128 n) {
  if (n <= UINT64_MAX) return isqrt(static_cast<u64>(n));
  u128 r = static_cast<u128>(std::sqrt(static_cast<long double>(n)));
  if (r == 0) r = 1;
  // a couple of Newton steps pin the estimate, then adjust exactly;
  // division forms of the comparisons avoid u128 overflow near 2^64
  for (int i = 0; i < 4; ++i) r = (r + n / r) >> 1;
  while (r > n / r) --r;
  while (r + 1 <= n / (r + 1)) ++r;
  return r;
}

bool is_square(i128 n, u128 *root) {
  if (n < 0) return false;
  u128 r = isqrt_u128(static_cast<u128>(n));
  if (root) *root = r;
  return r * r == static_cast<u128>(n);
}

i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i128 floor_div_i128(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::string i128_to_string(i128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  u128 x = neg ? -static_cast<u128>(v) : static_cast<u128>(v);
  std::string s;
  while (x) {
    s += static_cast<char>('0' + static_cast<int>(x % 10));
    x /= 10;
  }
  if (neg) s += '-';
  return {s.rbegin(), s.rend()};
}

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
  if (m == 1) return 0;
  u64 r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

} // namespace bqf
