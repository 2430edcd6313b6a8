#include "bqf/correlation.hpp"

#include "bqf/caps.hpp"
#include "bqf/numtheory.hpp"
#include "bqf/parallel.hpp"
#include "bqf/repcount.hpp"
#include "bqf/unitcone.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <optional>

namespace bqf {

Rat64::Rat64(i64 n, i64 d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("Rat64: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i64 g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rat64 Rat64::from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("Rat64: non-finite bound");
  if (x == 0.0) return {0, 1};
  // doubles are dyadic rationals; peel off the exponent exactly
  int exp = 0;
  double mant = std::frexp(x, &exp); // x = mant * 2^exp, |mant| in [0.5, 1)
  i64 m = static_cast<i64>(std::ldexp(mant, 53));
  int e = exp - 53;
  while (m != 0 && (m & 1) == 0) {
    m >>= 1;
    ++e;
  }
  if (e >= 0) {
    if (e > 10) throw std::invalid_argument("Rat64: bound out of range");
    return {m << e, 1};
  }
  if (-e > 62) throw std::invalid_argument("Rat64: denominator out of range");
  return {m, static_cast<i64>(1) << (-e)};
}

Box::Box(std::vector<std::pair<Rat64, Rat64>> bounds_) : bounds(std::move(bounds_)) {
  if (bounds.empty()) throw std::invalid_argument("Box: need d >= 1");
  for (const auto &[lo, hi] : bounds) {
    if (static_cast<i128>(lo.num) * hi.den > static_cast<i128>(hi.num) * lo.den)
      throw std::invalid_argument("Box: lower bound above upper bound");
    if (std::abs(lo.num) > lo.den || std::abs(hi.num) > hi.den)
      throw std::invalid_argument("Box: bounds must lie in [-1,1]");
  }
}

Box Box::unit_cube(int d) {
  std::vector<std::pair<Rat64, Rat64>> b(static_cast<size_t>(d), {Rat64(0, 1), Rat64(1, 1)});
  return Box(std::move(b));
}

double Box::volume() const {
  double v = 1.0;
  for (const auto &[lo, hi] : bounds) v *= hi.value() - lo.value();
  return v;
}

std::pair<i64, i64> Box::lattice_range(int j, i64 N) const {
  const auto &[lo, hi] = bounds[static_cast<size_t>(j)];
  i128 lo_raw = static_cast<i128>(N) * lo.num;
  i128 hi_raw = static_cast<i128>(N) * hi.num;
  i64 from = static_cast<i64>(-floor_div_i128(-lo_raw, lo.den)); // ceil
  i64 to = static_cast<i64>(floor_div_i128(hi_raw, hi.den));
  return {from, to};
}

double archimedean_density(const QuadForm &f) {
  switch (classify(f)) {
    case FormClass::PositiveDefinite:
      return 2.0 * std::numbers::pi /
             (definite_unit_count(f.D) * std::sqrt(static_cast<double>(-f.D)));
    case FormClass::Indefinite:
      return fundamental_pell(f.D).log_eps / std::sqrt(static_cast<double>(f.D));
    case FormClass::NegativeDefinite:
      throw std::invalid_argument("archimedean_density: negative definite form");
  }
  throw std::logic_error("archimedean_density: unreachable");
}

ValidationReport validate_system(const AffineSystem &system, const std::vector<QuadForm> &forms,
                                 const Box &box, i64 N) {
  if (forms.size() != static_cast<size_t>(system.t()))
    throw std::invalid_argument("validate_system: forms/system length mismatch");
  if (box.d() != system.d())
    throw std::invalid_argument("validate_system: box/system dimension mismatch");
  if (N < 1) throw std::invalid_argument("validate_system: N must be positive");

  ValidationReport rep;
  for (int i = 0; i < system.t(); ++i)
    for (int j = i + 1; j < system.t(); ++j)
      if (system.rows_proportional(i, j)) {
        rep.pass = false;
        rep.bad_i = i;
        rep.bad_j = j;
        rep.message = "linear parts of psi_" + std::to_string(i + 1) + " and psi_" +
                      std::to_string(j + 1) + " are proportional";
        return rep;
      }

  for (int i = 0; i < system.t(); ++i) {
    FormClass cls = classify(forms[static_cast<size_t>(i)]);
    if (cls == FormClass::NegativeDefinite) {
      rep.pass = false;
      rep.bad_i = i;
      rep.message = "form " + std::to_string(i + 1) + " is negative definite";
      return rep;
    }
    if (cls != FormClass::PositiveDefinite) continue;
    // affine minimum over N*K sits at a vertex: c_i + N * min over vertices
    // of the linear part
    BigRat minv = system.constant[static_cast<size_t>(i)];
    for (int j = 0; j < system.d(); ++j) {
      i64 L = system.linear[static_cast<size_t>(i)][static_cast<size_t>(j)];
      const auto &[lo, hi] = box.bounds[static_cast<size_t>(j)];
      BigRat pick = L >= 0 ? BigRat(BigInt(L) * lo.num, BigInt(lo.den))
                           : BigRat(BigInt(L) * hi.num, BigInt(hi.den));
      minv += N * pick;
    }
    if (minv < 0) {
      rep.pass = false;
      rep.bad_i = i;
      rep.message = "psi_" + std::to_string(i + 1) +
                    " takes negative values on the scaled box but form " + std::to_string(i + 1) +
                    " is positive definite";
      return rep;
    }
  }
  return rep;
}

double beta_inf(const Box &box, const std::vector<QuadForm> &forms, i64 N) {
  double vol = 1.0;
  for (int j = 0; j < box.d(); ++j) {
    const auto &[lo, hi] = box.bounds[static_cast<size_t>(j)];
    vol *= static_cast<double>(N) * (hi.value() - lo.value());
  }
  double dens = 1.0;
  for (const QuadForm &f : forms) dens *= archimedean_density(f);
  return vol * dens;
}

namespace {

struct FormTables {
  FormClass cls;
  std::optional<RepTable> pos; // r_f(n) for n >= 0
  std::optional<RepTable> neg; // r_f(-n) = r_{-f}(n), indefinite only

  i64 rep(i64 v) const {
    if (v > 0) return pos ? pos->counts[static_cast<size_t>(v)] : 0;
    if (v < 0) return neg ? neg->counts[static_cast<size_t>(-v)] : 0;
    return 0;
  }
};

struct LatticeSpec {
  std::vector<i64> lo, hi;
  bool empty = false;
  i128 points = 0;
};

LatticeSpec lattice_spec(const Box &box, i64 N) {
  LatticeSpec spec;
  spec.points = 1;
  for (int j = 0; j < box.d(); ++j) {
    auto [from, to] = box.lattice_range(j, N);
    spec.lo.push_back(from);
    spec.hi.push_back(to);
    if (from > to) spec.empty = true;
    else spec.points *= (to - from + 1);
  }
  return spec;
}

std::vector<FormTables> prepare_tables(const AffineSystem &system,
                                       const std::vector<QuadForm> &forms,
                                       const LatticeSpec &spec) {
  std::vector<FormTables> tabs;
  tabs.reserve(forms.size());
  for (int i = 0; i < system.t(); ++i) {
    const QuadForm &f = forms[static_cast<size_t>(i)];
    FormTables ft{classify(f), std::nullopt, std::nullopt};
    i128 vmin = system.constant[static_cast<size_t>(i)];
    i128 vmax = vmin;
    for (int j = 0; j < system.d(); ++j) {
      i64 L = system.linear[static_cast<size_t>(i)][static_cast<size_t>(j)];
      vmin += static_cast<i128>(L) * (L >= 0 ? spec.lo[static_cast<size_t>(j)]
                                             : spec.hi[static_cast<size_t>(j)]);
      vmax += static_cast<i128>(L) * (L >= 0 ? spec.hi[static_cast<size_t>(j)]
                                             : spec.lo[static_cast<size_t>(j)]);
    }
    if (vmax > caps().table_entries || -vmin > caps().table_entries)
      throw std::overflow_error("empirical_sum: psi range exceeds table cap");
    if (vmax >= 1) ft.pos = build_rep_table(f, static_cast<i64>(vmax));
    if (vmin <= -1) {
      if (ft.cls != FormClass::Indefinite)
        ft.neg = std::nullopt; // definite forms represent nothing negative
      else {
        QuadForm g = normalize_indefinite(negate(f));
        ft.neg = build_rep_table(g, static_cast<i64>(-vmin));
      }
    }
    tabs.push_back(std::move(ft));
  }
  return tabs;
}

} // namespace

i128 empirical_sum(const AffineSystem &system, const std::vector<QuadForm> &forms, const Box &box,
                   i64 N, bool skip_validation) {
  if (N < 1) throw std::invalid_argument("empirical_sum: N must be positive");
  if (!skip_validation) {
    ValidationReport rep = validate_system(system, forms, box, N);
    if (!rep.pass) throw validation_error("empirical_sum: " + rep.message);
  }
  LatticeSpec spec = lattice_spec(box, N);
  if (spec.empty) return 0;
  if (spec.points > (static_cast<i128>(1) << 40))
    throw std::overflow_error("empirical_sum: lattice too large");

  const int d = system.d();
  const int t = system.t();
  std::vector<FormTables> tabs = prepare_tables(system, forms, spec);

  // partition the outermost axis, sum per chunk, reduce in chunk order
  i64 outer_lo = spec.lo[0], outer_hi = spec.hi[0];
  i64 outer_len = outer_hi - outer_lo + 1;
  int workers = caps().threads < 1 ? 1 : caps().threads;
  std::vector<i128> partial(static_cast<size_t>(std::min<i64>(workers, outer_len)), 0);

  parallel_chunks(outer_len, workers, [&](int chunk, i64 cbeg, i64 cend) {
    i128 acc = 0;
    std::vector<i64> psi(static_cast<size_t>(t));
    std::vector<i64> point(static_cast<size_t>(d));

    std::function<void(int)> walk = [&](int j) {
      if (j == d - 1) {
        // innermost axis: advance psi by one column step per lattice point
        i64 from = spec.lo[static_cast<size_t>(j)], to = spec.hi[static_cast<size_t>(j)];
        std::vector<i64> cur(psi);
        for (int i = 0; i < t; ++i)
          cur[static_cast<size_t>(i)] +=
              system.linear[static_cast<size_t>(i)][static_cast<size_t>(j)] * from;
        for (i64 v = from; v <= to; ++v) {
          u64 prod = 1;
          bool zero = false;
          for (int i = 0; i < t; ++i) {
            i64 r = tabs[static_cast<size_t>(i)].rep(cur[static_cast<size_t>(i)]);
            if (r == 0) {
              zero = true;
              break;
            }
            if (__builtin_mul_overflow(prod, static_cast<u64>(r), &prod))
              throw std::overflow_error("empirical_sum: term overflow");
          }
          if (!zero) acc += static_cast<i128>(prod);
          for (int i = 0; i < t; ++i)
            cur[static_cast<size_t>(i)] +=
                system.linear[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }
        return;
      }
      i64 from = j == 0 ? outer_lo + cbeg : spec.lo[static_cast<size_t>(j)];
      i64 to = j == 0 ? outer_lo + cend - 1 : spec.hi[static_cast<size_t>(j)];
      for (i64 v = from; v <= to; ++v) {
        point[static_cast<size_t>(j)] = v;
        for (int i = 0; i < t; ++i)
          psi[static_cast<size_t>(i)] +=
              system.linear[static_cast<size_t>(i)][static_cast<size_t>(j)] * v;
        walk(j + 1);
        for (int i = 0; i < t; ++i)
          psi[static_cast<size_t>(i)] -=
              system.linear[static_cast<size_t>(i)][static_cast<size_t>(j)] * v;
      }
    };

    for (int i = 0; i < t; ++i) psi[static_cast<size_t>(i)] = system.constant[static_cast<size_t>(i)];
    if (d == 1) {
      // single axis: chunk the innermost loop directly
      LatticeSpec sub = spec;
      sub.lo[0] = outer_lo + cbeg;
      sub.hi[0] = outer_lo + cend - 1;
      std::vector<i64> cur(psi);
      for (int i = 0; i < t; ++i) cur[static_cast<size_t>(i)] += system.linear[static_cast<size_t>(i)][0] * sub.lo[0];
      for (i64 v = sub.lo[0]; v <= sub.hi[0]; ++v) {
        u64 prod = 1;
        bool zero = false;
        for (int i = 0; i < t; ++i) {
          i64 r = tabs[static_cast<size_t>(i)].rep(cur[static_cast<size_t>(i)]);
          if (r == 0) {
            zero = true;
            break;
          }
          if (__builtin_mul_overflow(prod, static_cast<u64>(r), &prod))
            throw std::overflow_error("empirical_sum: term overflow");
        }
        if (!zero) acc += static_cast<i128>(prod);
        for (int i = 0; i < t; ++i) cur[static_cast<size_t>(i)] += system.linear[static_cast<size_t>(i)][0];
      }
    } else {
      walk(0);
    }
    partial[static_cast<size_t>(chunk)] = acc;
  });

  i128 total = 0;
  for (i128 p : partial) total += p;
  return total;
}

CorrelationReport predict_and_compare(const AffineSystem &system,
                                      const std::vector<QuadForm> &forms, const Box &box, i64 N,
                                      u64 p_max, int m_max) {
  ValidationReport vrep = validate_system(system, forms, box, N);
  if (!vrep.pass) throw validation_error("predict_and_compare: " + vrep.message);

  CorrelationReport rep;
  rep.N = N;
  rep.p_max = p_max;
  rep.m_max = m_max;

  auto t0 = std::chrono::steady_clock::now();
  rep.empirical = empirical_sum(system, forms, box, N, true);
  auto t1 = std::chrono::steady_clock::now();
  rep.beta_inf_value = beta_inf(box, forms, N);
  rep.series = singular_series(system, forms, p_max, m_max);
  auto t2 = std::chrono::steady_clock::now();

  rep.predicted = rep.beta_inf_value * rat_to_double(rep.series.product);
  if (rep.predicted > 0)
    rep.relative_error =
        std::abs(static_cast<double>(rep.empirical) - rep.predicted) / rep.predicted;
  rep.ms_empirical = std::chrono::duration<double, std::milli>(t1 - t0).count();
  rep.ms_prediction = std::chrono::duration<double, std::milli>(t2 - t1).count();
  return rep;
}

ApAverage ap_average(const QuadForm &f, i64 q, i64 A, i64 N) {
  if (q < 1) throw std::invalid_argument("ap_average: q must be positive");
  if (A < 0 || A >= q) throw std::invalid_argument("ap_average: need 0 <= A < q");
  if (N < 1) throw std::invalid_argument("ap_average: N must be positive");
  i64 first = A == 0 ? q : A;
  if (first > N) throw std::invalid_argument("ap_average: empty progression");

  ApAverage out;
  RepTable table = build_rep_table(f, N);
  for (i64 n = first; n <= N; n += q) {
    out.sum += table.counts[static_cast<size_t>(n)];
    ++out.terms;
  }
  out.empirical = static_cast<double>(out.sum) / static_cast<double>(out.terms);
  out.rho_value = rho(f, A, q);
  out.predicted =
      archimedean_density(f) * static_cast<double>(out.rho_value) / static_cast<double>(q);
  out.deviation = out.predicted > 0 ? std::abs(out.empirical - out.predicted) / out.predicted
                                    : out.empirical;
  return out;
}

WTrickConfig build_wtrick(u64 w, i64 threshold) {
  if (w < 3) throw std::invalid_argument("build_wtrick: w must be at least 3");
  if (threshold < 2) throw std::invalid_argument("build_wtrick: threshold must be at least 2");
  WTrickConfig cfg;
  cfg.w_bound = w;
  cfg.threshold = threshold;
  for (u64 p : primes_up_to(w - 1)) {
    int a = 0;
    i128 pk = 1;
    while (pk < threshold) {
      pk *= p;
      ++a;
    }
    cfg.alpha.emplace_back(p, a);
    i128 W = static_cast<i128>(cfg.W) * pk;
    if (W > INT64_MAX) throw std::overflow_error("build_wtrick: W exceeds 2^63");
    cfg.W = static_cast<i64>(W);
  }
  return wtrick_with_residue(cfg, 0);
}

WTrickConfig wtrick_with_residue(WTrickConfig cfg, i64 A) {
  if (A < 0 || A >= cfg.W) throw std::invalid_argument("wtrick_with_residue: need 0 <= A < W");
  cfg.A = A;
  cfg.residue_admissible = true;
  for (const auto &[p, a] : cfg.alpha) {
    i64 pk = 1;
    for (int i = 0; i < a; ++i) pk *= static_cast<i64>(p);
    if (A % pk == 0) cfg.residue_admissible = false;
  }
  return cfg;
}

namespace {

double wtrick_denominator(const QuadForm &f, const WTrickConfig &cfg) {
  i64 rho_w = rho(f, cfg.A, cfg.W);
  if (rho_w == 0) throw std::domain_error("normalized_rep: locally obstructed class (rho = 0)");
  return archimedean_density(f) * static_cast<double>(rho_w) / static_cast<double>(cfg.W);
}

} // namespace

double normalized_rep(const QuadForm &f, const WTrickConfig &cfg, i64 n) {
  if (n < 0) throw std::invalid_argument("normalized_rep: n must be nonnegative");
  double denom = wtrick_denominator(f, cfg);
  i128 arg = static_cast<i128>(cfg.W) * n + cfg.A;
  if (arg > INT64_MAX) throw std::overflow_error("normalized_rep: argument overflow");
  return static_cast<double>(count_rep(f, static_cast<i64>(arg))) / denom;
}

double wtrick_mean(const QuadForm &f, const WTrickConfig &cfg, i64 n_max) {
  if (n_max < 1) throw std::invalid_argument("wtrick_mean: n_max must be positive");
  double denom = wtrick_denominator(f, cfg);
  std::vector<i64> vals = rep_on_progression(f, cfg.W + cfg.A, cfg.W, n_max);
  i64 sum = 0;
  for (i64 v : vals) sum += v;
  return static_cast<double>(sum) / (static_cast<double>(n_max) * denom);
}

} // namespace bqf
