#pragma once

#include <cstdint>
#include <string>

namespace bqf {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

// floor(sqrt(n)), exact
u64 isqrt(u64 n);
u128 isqrt_u128(u128 n);

// root receives floor(sqrt(n)) when n >= 0
bool is_square(i128 n, u128 *root = nullptr);

// floor division (rounds toward -inf); b != 0
i64 floor_div(i64 a, i64 b);
i128 floor_div_i128(i128 a, i128 b);

std::string i128_to_string(i128 v);

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);

} // namespace bqf
