#include "bqf/repcount.hpp"

#include "bqf/caps.hpp"
#include "bqf/parallel.hpp"

#include <cmath>
#include <stdexcept>

namespace bqf {

namespace detail {

i64 definite_y_extent(const QuadForm &f, i64 limit) {
  // (-D) y^2 <= 4 a limit
  u128 bound = static_cast<u128>(4 * static_cast<i128>(f.a) * limit) / static_cast<u64>(-f.D);
  return static_cast<i64>(isqrt_u128(bound));
}

i64 indefinite_y_extent(const QuadForm &f, const FundamentalCone &cone, i64 limit) {
  // y < theta * x and f = x^2 (a + b t + c t^2) with slope t in [0, theta);
  // the quadratic is concave, so its min on the interval is at an endpoint
  double theta = rat_to_double(BigRat(cone.theta_num, cone.theta_den));
  BigInt p = f.a * cone.theta_den * cone.theta_den + f.b * cone.theta_num * cone.theta_den +
             f.c * cone.theta_num * cone.theta_num;
  double g_theta = rat_to_double(BigRat(p, cone.theta_den * cone.theta_den));
  double cmin = std::min(static_cast<double>(f.a), g_theta);
  double yb = theta * std::sqrt(static_cast<double>(limit) / cmin) * (1.0 + 1e-9) + 2.0;
  return static_cast<i64>(yb);
}

} // namespace detail

i64 RepTable::at(i64 n) const {
  if (n < 0 || n > limit) throw std::out_of_range("RepTable::at: index outside table");
  return counts[static_cast<size_t>(n)];
}

int definite_unit_count(i64 D) {
  if (D >= 0) throw std::invalid_argument("definite_unit_count: D must be negative");
  if (D == -3) return 6;
  if (D == -4) return 4;
  return 2;
}

i64 count_rep_definite(const QuadForm &f, i64 n) {
  if (classify(f) != FormClass::PositiveDefinite)
    throw std::invalid_argument("count_rep_definite: form must be positive definite");
  if (n < 0) throw std::invalid_argument("count_rep_definite: n must be nonnegative");
  if (n == 0) return 0;
  const i64 a = f.a, b = f.b;
  const int w = definite_unit_count(f.D);
  u128 ybound = static_cast<u128>(4 * static_cast<i128>(a) * n) / static_cast<u64>(-f.D);
  i64 Y = static_cast<i64>(isqrt_u128(ybound));
  i64 total = 0;
  for (i64 y = -Y; y <= Y; ++y) {
    i128 disc = 4 * static_cast<i128>(a) * n + static_cast<i128>(f.D) * y * y;
    u128 s;
    if (!is_square(disc, &s)) continue;
    i64 si = static_cast<i64>(s);
    for (int pass = 0; pass < (si == 0 ? 1 : 2); ++pass) {
      i64 num = (pass == 0 ? si : -si) - b * y;
      if (num % (2 * a) == 0) ++total;
    }
  }
  if (total % w != 0)
    throw std::runtime_error("count_rep_definite: solution count not divisible by w(D)");
  return total / w;
}

i64 count_rep_indefinite(const QuadForm &f, const FundamentalCone &cone, i64 n) {
  if (!is_normalized_indefinite(f))
    throw std::invalid_argument("count_rep_indefinite: form must be normalized (a > 0 > c)");
  if (n == 0) return 0;
  if (n < 0) {
    QuadForm g = normalize_indefinite(negate(f));
    return count_rep_indefinite(g, fundamental_cone(g), -n);
  }
  const i64 a = f.a, b = f.b;
  i64 Y = detail::indefinite_y_extent(f, cone, n);
  i64 total = 0;
  for (i64 y = 0; y <= Y; ++y) {
    i128 disc = 4 * static_cast<i128>(a) * n + static_cast<i128>(f.D) * y * y;
    u128 s;
    if (!is_square(disc, &s)) continue;
    i64 si = static_cast<i64>(s);
    for (int pass = 0; pass < (si == 0 ? 1 : 2); ++pass) {
      i64 num = (pass == 0 ? si : -si) - b * y;
      if (num % (2 * a) != 0) continue;
      i64 x = num / (2 * a);
      if (cone.contains(x, y)) ++total;
    }
  }
  return total;
}

i64 count_rep_indefinite(const QuadForm &f, i64 n) {
  return count_rep_indefinite(f, fundamental_cone(f), n);
}

i64 count_rep(const QuadForm &f, i64 n) {
  switch (classify(f)) {
    case FormClass::PositiveDefinite:
      return count_rep_definite(f, n);
    case FormClass::Indefinite: {
      QuadForm g = is_normalized_indefinite(f) ? f : normalize_indefinite(f);
      return count_rep_indefinite(g, n);
    }
    case FormClass::NegativeDefinite:
      throw std::invalid_argument("count_rep: negative definite; pass the negated form");
  }
  throw std::logic_error("count_rep: unreachable");
}

namespace {

// threads get private tables; fall back to one worker if that would be
// larger than the global table budget
int table_workers(i64 entries) {
  int t = caps().threads;
  if (t <= 1) return 1;
  if (static_cast<i128>(entries) * t > static_cast<i128>(caps().table_entries)) return 1;
  return t;
}

} // namespace

RepTable build_rep_table(const QuadForm &f, i64 limit) {
  if (limit < 1) throw std::invalid_argument("build_rep_table: limit must be positive");
  if (limit + 1 > caps().table_entries)
    throw std::overflow_error("build_rep_table: limit exceeds table cap");

  RepTable table{f, limit, std::vector<std::uint32_t>(static_cast<size_t>(limit) + 1, 0)};
  FormClass cls = classify(f);
  if (cls == FormClass::NegativeDefinite)
    throw std::invalid_argument("build_rep_table: negative definite; pass the negated form");

  const size_t entries = static_cast<size_t>(limit) + 1;
  int workers = table_workers(limit + 1);
  std::vector<std::vector<std::uint32_t>> part(workers > 1 ? workers : 0);

  auto run = [&](auto &&slices, i64 span_lo, i64 span_hi) {
    i64 span = span_hi - span_lo + 1;
    parallel_chunks(span, workers, [&](int chunk, i64 beg, i64 end) {
      std::vector<std::uint32_t> *dst = &table.counts;
      if (workers > 1) {
        part[chunk].assign(entries, 0);
        dst = &part[chunk];
      }
      slices(span_lo + beg, span_lo + end - 1, [&](i64 n) { ++(*dst)[static_cast<size_t>(n)]; });
    });
    for (auto &p : part) {
      for (size_t i = 0; i < entries; ++i) table.counts[i] += p[i];
      p.clear();
      p.shrink_to_fit();
    }
  };

  if (cls == FormClass::PositiveDefinite) {
    i64 Y = detail::definite_y_extent(f, limit);
    run([&](i64 lo, i64 hi, auto visit) { detail::definite_slices(f, limit, lo, hi, visit); },
        -Y, Y);
    const std::uint32_t w = static_cast<std::uint32_t>(definite_unit_count(f.D));
    for (size_t i = 1; i < entries; ++i) {
      if (table.counts[i] % w != 0)
        throw std::runtime_error("build_rep_table: solution count not divisible by w(D)");
      table.counts[i] /= w;
    }
  } else {
    QuadForm g = is_normalized_indefinite(f) ? f : normalize_indefinite(f);
    FundamentalCone cone = fundamental_cone(g);
    i64 Y = detail::indefinite_y_extent(g, cone, limit);
    run([&](i64 lo, i64 hi, auto visit) { detail::indefinite_slices(g, cone, limit, lo, hi, visit); },
        0, Y);
  }
  return table;
}

std::vector<i64> rep_on_progression(const QuadForm &f, i64 start, i64 step, i64 count) {
  if (start < 0 || step < 1 || count < 1)
    throw std::invalid_argument("rep_on_progression: bad progression");
  i128 limit128 = static_cast<i128>(start) + static_cast<i128>(step) * (count - 1);
  if (limit128 > (static_cast<i128>(1) << 62))
    throw std::overflow_error("rep_on_progression: range too large");
  i64 limit = static_cast<i64>(limit128);

  std::vector<i64> out(static_cast<size_t>(count), 0);
  auto visit = [&](i64 n) {
    if (n < start) return;
    i64 d = n - start;
    if (d % step != 0) return;
    ++out[static_cast<size_t>(d / step)];
  };

  FormClass cls = classify(f);
  if (cls == FormClass::NegativeDefinite)
    throw std::invalid_argument("rep_on_progression: negative definite; pass the negated form");
  if (cls == FormClass::PositiveDefinite) {
    i64 Y = detail::definite_y_extent(f, limit);
    detail::definite_slices(f, limit, -Y, Y, visit);
    const i64 w = definite_unit_count(f.D);
    for (auto &v : out) {
      if (v % w != 0) throw std::runtime_error("rep_on_progression: count not divisible by w(D)");
      v /= w;
    }
  } else {
    QuadForm g = is_normalized_indefinite(f) ? f : normalize_indefinite(f);
    FundamentalCone cone = fundamental_cone(g);
    i64 Y = detail::indefinite_y_extent(g, cone, limit);
    detail::indefinite_slices(g, cone, limit, 0, Y, visit);
  }
  return out;
}

} // namespace bqf
