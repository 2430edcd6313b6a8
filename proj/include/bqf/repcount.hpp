#pragma once

#include "bqf/forms.hpp"
#include "bqf/unitcone.hpp"

#include <cstdint>
#include <vector>

namespace bqf {

// counts[n] = r_f(n) for 0 <= n <= limit; counts[0] = 0 (no non-trivial
// representation of zero)
struct RepTable {
  QuadForm form;
  i64 limit;
  std::vector<std::uint32_t> counts;

  i64 at(i64 n) const;
};

// automorph count w(D) for definite discriminants: 6, 4, 2 for D = -3, -4, < -4
int definite_unit_count(i64 D);

// solutions of f(x,y) = n counted once per automorph orbit; exact.
// Definite: all integer solutions divided by w(D). Rejects n < 0.
i64 count_rep_definite(const QuadForm &f, i64 n);

// Indefinite (normalized a > 0 > c): cone representatives of f(x,y)=n for
// n > 0; negative n are counted through -f; n = 0 gives 0.
i64 count_rep_indefinite(const QuadForm &f, i64 n);
i64 count_rep_indefinite(const QuadForm &f, const FundamentalCone &cone, i64 n);

// dispatch on the class of f; indefinite forms are normalized first,
// negative definite forms are rejected
i64 count_rep(const QuadForm &f, i64 n);

// single sweep of the fundamental region {1 <= f <= limit}; O(limit) time
RepTable build_rep_table(const QuadForm &f, i64 limit);

// r_f(start + k*step) for k = 0..count-1, via one progression-filtered sweep
std::vector<i64> rep_on_progression(const QuadForm &f, i64 start, i64 step, i64 count);

namespace detail {

// y extent of {1 <= f <= limit} for a positive definite form: |y| <= Y
i64 definite_y_extent(const QuadForm &f, i64 limit);

// safe upper bound for y over {cone, 0 < f <= limit}
i64 indefinite_y_extent(const QuadForm &f, const FundamentalCone &cone, i64 limit);

// visit(n) once per integer solution (x,y) != 0 of 1 <= f(x,y) = n <= limit
// with y in [y_lo, y_hi]; every solution of a given n is visited (w(D)-fold)
template <typename Fn>
void definite_slices(const QuadForm &f, i64 limit, i64 y_lo, i64 y_hi, Fn &&visit) {
  const i64 a = f.a, b = f.b;
  const i128 fourAL = 4 * static_cast<i128>(a) * limit;
  for (i64 y = y_lo; y <= y_hi; ++y) {
    i128 disc = fourAL + static_cast<i128>(f.D) * y * y;
    if (disc < 0) continue;
    i64 s = static_cast<i64>(isqrt_u128(static_cast<u128>(disc)));
    i64 x_lo = -floor_div(b * y + s, 2 * a);
    i64 x_hi = floor_div(s - b * y, 2 * a);
    i128 n = f.eval(x_lo, y);
    i128 dn = static_cast<i128>(a) * (2 * x_lo + 1) + static_cast<i128>(b) * y;
    for (i64 x = x_lo; x <= x_hi; ++x) {
      if (n >= 1) visit(static_cast<i64>(n));
      n += dn;
      dn += 2 * a;
    }
  }
}

// visit(n) once per cone point with f = n <= limit and y in [y_lo, y_hi]
template <typename Fn>
void indefinite_slices(const QuadForm &f, const FundamentalCone &cone, i64 limit, i64 y_lo,
                       i64 y_hi, Fn &&visit) {
  const i64 a = f.a, b = f.b;
  const i128 fourAL = 4 * static_cast<i128>(a) * limit;
  for (i64 y = y_lo; y <= y_hi; ++y) {
    i128 disc = fourAL + static_cast<i128>(f.D) * y * y;
    i64 s = static_cast<i64>(isqrt_u128(static_cast<u128>(disc)));
    i64 x_lo = cone.min_x(y);
    i64 x_hi = floor_div(s - b * y, 2 * a);
    if (x_lo > x_hi) continue;
    i128 n = f.eval(x_lo, y);
    i128 dn = static_cast<i128>(a) * (2 * x_lo + 1) + static_cast<i128>(b) * y;
    for (i64 x = x_lo; x <= x_hi; ++x) {
      visit(static_cast<i64>(n));
      n += dn;
      dn += 2 * a;
    }
  }
}

} // namespace detail

} // namespace bqf
