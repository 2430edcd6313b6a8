#pragma once

#include "bqf/bigint.hpp"
#include "bqf/forms.hpp"

#include <utility>

namespace bqf {

// minimal (t0, u0) with t0^2 - D u0^2 = 4, t0, u0 > 0; eps = (t0 + u0 sqrt(D))/2
struct PellSolution {
  i64 D;
  BigInt t0, u0;
  double log_eps;
};

// 2x2 integer matrix of determinant 1, acting on column vectors
struct Automorph {
  BigInt m11, m12, m21, m22;

  std::pair<BigInt, BigInt> apply(const BigInt &x, const BigInt &y) const {
    return {m11 * x + m12 * y, m21 * x + m22 * y};
  }
  Automorph inverse() const { return {m22, -m12, -m21, m11}; }
  BigInt det() const { return m11 * m22 - m12 * m21; }
};

// The sector 0 <= y/x < theta (x >= 1), a fundamental domain for the unit
// action {+-T^k} on the positivity region of a normalized indefinite form.
// theta is the exact rational slope of the automorph image of (1,0); the
// lower edge {y=0} is included and the upper edge {y=theta x} excluded.
struct FundamentalCone {
  QuadForm form;
  BigInt theta_num, theta_den; // theta = num/den > 0, lowest terms
  Automorph automorph;

  bool contains(i64 x, i64 y) const;
  bool contains(const BigInt &x, const BigInt &y) const;
  // smallest x with (x, y) in the cone, i.e. max(1, floor(y/theta) + 1)
  i64 min_x(i64 y) const;
};

// Rejects D <= 0, D = 2,3 mod 4 and square D. Works for any (not
// necessarily fundamental) discriminant; computed from the reduction cycle
// of the principal form, so t0, u0 may far exceed 64 bits.
PellSolution fundamental_pell(i64 D);

// Generator of the proper automorphism group of f (up to sign), built from
// fundamental_pell(f.D). Requires a > 0 > c. Satisfies f(sigma(x,y)) = f(x,y)
// identically and det = 1; both are verified at construction.
Automorph automorph_of(const QuadForm &f);

FundamentalCone fundamental_cone(const QuadForm &f);

// The unique cone representative of the orbit {+-sigma^k p}; requires
// f(p) > 0, p != 0.
std::pair<i64, i64> orbit_canonicalize(const FundamentalCone &cone, i64 x, i64 y);
std::pair<i64, i64> orbit_canonicalize(const QuadForm &f, i64 x, i64 y);

// area of {(x,y) in cone : 0 < f(x,y) <= N} = N log(eps)/sqrt(D)
double vol_K0(const QuadForm &f, double N);

} // namespace bqf
