#pragma once

#include "bqf/affine.hpp"
#include "bqf/bigint.hpp"
#include "bqf/forms.hpp"
#include "bqf/localdensities.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bqf {

// exact rational bound, |val| <= 1, denominator positive
struct Rat64 {
  i64 num = 0;
  i64 den = 1;

  Rat64() = default;
  Rat64(i64 n, i64 d);
  static Rat64 from_double(double x); // exact dyadic conversion
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// axis-aligned box K = prod [lo_j, hi_j] inside [-1,1]^d; summation runs
// over the integer points of N*K
struct Box {
  std::vector<std::pair<Rat64, Rat64>> bounds;

  explicit Box(std::vector<std::pair<Rat64, Rat64>> bounds_);
  static Box unit_cube(int d); // [0,1]^d

  int d() const { return static_cast<int>(bounds.size()); }
  double volume() const; // prod (hi - lo)
  // integer range of N * [lo_j, hi_j]
  std::pair<i64, i64> lattice_range(int j, i64 N) const;
};

struct ValidationReport {
  bool pass = true;
  std::string message;
  int bad_i = -1, bad_j = -1; // offending pair / form index
};

// failed system validation surfaced to callers (CLI exit code 2)
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// W = prod_{p < w} p^alpha(p) with p^(alpha-1) < T <= p^alpha, and the
// residue class A mod W the sums are restricted to
struct WTrickConfig {
  u64 w_bound = 0;
  i64 threshold = 0;
  i64 W = 1;
  i64 A = 0;
  std::vector<std::pair<u64, int>> alpha;
  bool residue_admissible = false; // A != 0 mod p^alpha(p) for all p < w
};

struct CorrelationReport {
  i128 empirical = 0;
  double beta_inf_value = 0;
  SingularSeries series;
  double predicted = 0;
  double relative_error = 0;
  i64 N = 0;
  u64 p_max = 0;
  int m_max = 0;
  double ms_empirical = 0;
  double ms_prediction = 0;
};

struct ApAverage {
  i64 sum = 0;   // exact sum of r_f over the progression
  i64 terms = 0; // progression length
  double empirical = 0;
  i64 rho_value = 0;
  double predicted = 0;
  double deviation = 0; // |emp - pred|/pred when pred > 0, else emp
};

// 2 pi / (w(D) sqrt(-D)) for positive definite, log(eps)/sqrt(D) for
// indefinite; rejects negative definite forms
double archimedean_density(const QuadForm &f);

// pairwise non-proportional linear parts, and psi_i >= 0 on N*K for every
// positive definite f_i (checked at box vertices: affine extrema)
ValidationReport validate_system(const AffineSystem &system, const std::vector<QuadForm> &forms,
                                 const Box &box, i64 N = 1);

// vol(N*K) times the product of archimedean densities
double beta_inf(const Box &box, const std::vector<QuadForm> &forms, i64 N);

// sum over n in Z^d cap N*K of prod_i r_{f_i}(psi_i(n)); exact
i128 empirical_sum(const AffineSystem &system, const std::vector<QuadForm> &forms, const Box &box,
                   i64 N, bool skip_validation = false);

CorrelationReport predict_and_compare(const AffineSystem &system,
                                      const std::vector<QuadForm> &forms, const Box &box, i64 N,
                                      u64 p_max, int m_max = 0);

// mean of r_f over {n <= N : n = A mod q} against the local prediction
// (archimedean density) * rho_{f,A}(q)/q
ApAverage ap_average(const QuadForm &f, i64 q, i64 A, i64 N);

WTrickConfig build_wtrick(u64 w, i64 threshold);
WTrickConfig wtrick_with_residue(WTrickConfig cfg, i64 A);

// r'_{f,A}(n) = r_f(W n + A) / ((archimedean density) rho_{f,A}(W)/W);
// throws domain_error when rho_{f,A}(W) = 0 (locally obstructed class)
double normalized_rep(const QuadForm &f, const WTrickConfig &cfg, i64 n);

// mean of normalized_rep over n = 1..n_max, via one progression sweep
double wtrick_mean(const QuadForm &f, const WTrickConfig &cfg, i64 n_max);

} // namespace bqf
