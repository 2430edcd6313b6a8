#pragma once

#include "bqf/affine.hpp"
#include "bqf/bigint.hpp"
#include "bqf/forms.hpp"

#include <vector>

namespace bqf {

// counts[A] = rho_{f,A}(q) = |{(x,y) in (Z/q)^2 : f(x,y) = A mod q}|;
// row sum is q^2
struct DensityTable {
  QuadForm form;
  i64 modulus;
  std::vector<i64> counts;
};

// one p-adic factor of the singular series: the average
// E_{a in (Z/p^m)^d} prod_i rho_{f_i, psi_i(a)}(p^m) / p^m at the first m
// where two consecutive levels agree exactly
struct LocalFactor {
  u64 prime = 0;
  int m_used = 0;
  BigRat value = 0;
  bool stabilized = false;
};

struct SingularSeries {
  BigRat product = 1;
  std::vector<LocalFactor> factors;
};

// direct q^2 sweep; q >= 1 and q <= caps().density_modulus
DensityTable build_density_table(const QuadForm &f, i64 q);

// rho_{f, A mod q}(q) via CRT over the prime-power factorization of q
i64 rho(const QuadForm &f, i64 A, i64 q);

// exact rational average at m = 1, 2, ...; stops when two consecutive m
// agree exactly or m_max is reached. m_max <= 0 selects the heuristic
// max(4, 2 v_p(2 D_1...D_t) + 2). Throws if the cost cap blocks even m = 1.
LocalFactor beta_p(const AffineSystem &system, const std::vector<QuadForm> &forms, u64 p,
                   int m_max = 0);

int default_m_max(const std::vector<QuadForm> &forms, u64 p);

// prod_{p <= p_max} beta_p, with the per-prime diagnostics
SingularSeries singular_series(const AffineSystem &system, const std::vector<QuadForm> &forms,
                               u64 p_max, int m_max = 0);

} // namespace bqf
