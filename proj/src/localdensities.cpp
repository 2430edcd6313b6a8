#include "bqf/localdensities.hpp"

#include "bqf/caps.hpp"
#include "bqf/numtheory.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace bqf {

DensityTable build_density_table(const QuadForm &f, i64 q) {
  if (q < 1) throw std::invalid_argument("build_density_table: q must be positive");
  if (q > caps().density_modulus)
    throw std::overflow_error("build_density_table: q exceeds density modulus cap");
  DensityTable table{f, q, std::vector<i64>(static_cast<size_t>(q), 0)};
  const i64 am = ((f.a % q) + q) % q;
  const i64 bm = ((f.b % q) + q) % q;
  const i64 cm = ((f.c % q) + q) % q;
  for (i64 x = 0; x < q; ++x) {
    const i64 axx = am * x % q * x % q;
    const i64 bx = bm * x % q;
    for (i64 y = 0; y < q; ++y) {
      i64 v = (axx + bx * y + cm * y % q * y) % q;
      ++table.counts[static_cast<size_t>(v)];
    }
  }
  return table;
}

i64 rho(const QuadForm &f, i64 A, i64 q) {
  if (q < 1) throw std::invalid_argument("rho: q must be positive");
  if (q == 1) return 1;
  i64 a = ((A % q) + q) % q;
  Factorization fac = factorize(static_cast<u64>(q));
  i128 out = 1;
  for (const auto &[p, e] : fac.factors) {
    i64 pk = 1;
    for (int i = 0; i < e; ++i) pk *= static_cast<i64>(p);
    DensityTable t = build_density_table(f, pk);
    out *= t.counts[static_cast<size_t>(a % pk)];
    if (out > INT64_MAX) throw std::overflow_error("rho: count overflow");
    if (out == 0) return 0;
  }
  return static_cast<i64>(out);
}

int default_m_max(const std::vector<QuadForm> &forms, u64 p) {
  // v_p of 2 prod |D_i|
  int v = p == 2 ? 1 : 0;
  for (const QuadForm &f : forms) {
    i64 d = f.D < 0 ? -f.D : f.D;
    while (d % static_cast<i64>(p) == 0) {
      d /= static_cast<i64>(p);
      ++v;
    }
  }
  int m = 2 * v + 2;
  return m < 4 ? 4 : m;
}

LocalFactor beta_p(const AffineSystem &system, const std::vector<QuadForm> &forms, u64 p,
                   int m_max) {
  if (!is_prime(p)) throw std::invalid_argument("beta_p: p must be prime");
  const int t = system.t();
  const int d = system.d();
  if (forms.size() != static_cast<size_t>(t))
    throw std::invalid_argument("beta_p: forms/system length mismatch");
  if (m_max <= 0) m_max = default_m_max(forms, p);

  BigRat prev;
  bool have_prev = false;
  int last_m = 0;

  for (int m = 1; m <= m_max; ++m) {
    i128 q128 = 1;
    for (int i = 0; i < m; ++i) q128 *= p;
    if (q128 > caps().density_modulus) break;
    i128 cost = 1;
    bool too_big = false;
    for (int j = 0; j < d; ++j) {
      cost *= q128;
      if (cost > caps().betap_cost) { too_big = true; break; }
    }
    if (too_big) break;
    const i64 q = static_cast<i64>(q128);

    std::vector<DensityTable> tables;
    tables.reserve(forms.size());
    for (const QuadForm &f : forms) tables.push_back(build_density_table(f, q));

    // linear data mod q, and psi values at a = 0
    std::vector<std::vector<i64>> lin(t, std::vector<i64>(d));
    std::vector<i64> psi(t);
    for (int i = 0; i < t; ++i) {
      for (int j = 0; j < d; ++j) lin[i][j] = ((system.linear[i][j] % q) + q) % q;
      psi[i] = ((system.constant[i] % q) + q) % q;
    }

    const bool big_terms = 2.0 * t * std::log2(static_cast<double>(q)) > 120.0;
    BigInt num = 0;
    i128 acc = 0;
    const i128 flush_at = static_cast<i128>(1) << 120;

    std::function<void(int)> walk = [&](int j) {
      if (j == d) {
        if (big_terms) {
          BigInt term = 1;
          for (int i = 0; i < t; ++i) term *= tables[i].counts[static_cast<size_t>(psi[i])];
          num += term;
        } else {
          i128 term = 1;
          for (int i = 0; i < t; ++i) term *= tables[i].counts[static_cast<size_t>(psi[i])];
          acc += term;
          if (acc >= flush_at) {
            num += BigInt(acc);
            acc = 0;
          }
        }
        return;
      }
      // q steps of +lin[.][j] return psi to its entry value (q l = 0 mod q)
      for (i64 v = 0; v < q; ++v) {
        walk(j + 1);
        for (int i = 0; i < t; ++i) {
          psi[i] += lin[i][j];
          if (psi[i] >= q) psi[i] -= q;
        }
      }
    };
    walk(0);
    num += BigInt(acc);

    BigInt den = 1;
    for (int i = 0; i < d + t; ++i) den *= q;
    BigRat value(num, den);

    if (have_prev && value == prev) return {p, m - 1, value, true};
    prev = value;
    have_prev = true;
    last_m = m;
  }

  if (!have_prev) throw std::overflow_error("beta_p: cost cap excludes even m = 1");
  return {p, last_m, prev, false};
}

SingularSeries singular_series(const AffineSystem &system, const std::vector<QuadForm> &forms,
                               u64 p_max, int m_max) {
  SingularSeries out;
  if (p_max < 2) return out;
  for (u64 p : primes_up_to(p_max)) {
    LocalFactor lf = beta_p(system, forms, p, m_max);
    out.product *= lf.value;
    out.factors.push_back(std::move(lf));
  }
  return out;
}

} // namespace bqf
