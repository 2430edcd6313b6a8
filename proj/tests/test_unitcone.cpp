#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bqf/unitcone.hpp"
#include "oracles.hpp"

#include <cmath>
#include <map>
#include <set>

using namespace bqf;

namespace {

std::vector<i64> valid_discriminants(i64 lo, i64 hi, size_t count) {
  std::vector<i64> out;
  for (i64 D = lo; D <= hi && out.size() < count; ++D) {
    i64 m = ((D % 4) + 4) % 4;
    if (m != 0 && m != 1) continue;
    i64 s = static_cast<i64>(isqrt(static_cast<u64>(D)));
    if (s * s == D) continue;
    out.push_back(D);
  }
  return out;
}

QuadForm principal_form(i64 D) {
  i64 b0 = ((D % 2) + 2) % 2;
  return {1, b0, (b0 * b0 - D) / 4};
}

} // namespace

TEST_CASE("fundamental_pell small discriminants") {
  PellSolution p5 = fundamental_pell(5);
  CHECK(p5.t0 == 3);
  CHECK(p5.u0 == 1);
  CHECK(p5.log_eps == doctest::Approx(0.9624236501).epsilon(1e-9));

  PellSolution p8 = fundamental_pell(8);
  CHECK(p8.t0 == 6);
  CHECK(p8.u0 == 2);
  CHECK(p8.log_eps == doctest::Approx(std::log(3 + 2 * std::sqrt(2.0))).epsilon(1e-12));

  PellSolution p13 = fundamental_pell(13);
  CHECK(p13.t0 == 11);
  CHECK(p13.u0 == 3);
  CHECK(p13.log_eps == doctest::Approx(2.3895).epsilon(1e-4));

  CHECK_THROWS_AS(fundamental_pell(16), std::invalid_argument); // square
  CHECK_THROWS_AS(fundamental_pell(-4), std::invalid_argument);
  CHECK_THROWS_AS(fundamental_pell(7), std::invalid_argument); // 3 mod 4
}

TEST_CASE("fundamental_pell agrees with brute force where brute force reaches") {
  for (i64 D : valid_discriminants(5, 200, 100)) {
    auto bf = oracle::pell_bruteforce(D, 100000);
    PellSolution p = fundamental_pell(D);
    CHECK(p.t0 * p.t0 - D * p.u0 * p.u0 == 4);
    CHECK(p.t0 > 0);
    CHECK(p.u0 > 0);
    if (bf) {
      CHECK(p.t0 == bf->first);
      CHECK(p.u0 == bf->second);
    }
    // log eps consistency
    if (fits_i64(p.t0)) {
      double eps = (p.t0.convert_to<double>() +
                    p.u0.convert_to<double>() * std::sqrt(static_cast<double>(D))) /
                   2.0;
      CHECK(p.log_eps == doctest::Approx(std::log(eps)).epsilon(1e-12));
    }
  }
}

TEST_CASE("fundamental_pell handles discriminants with huge fundamental units") {
  PellSolution p421 = fundamental_pell(421);
  CHECK(p421.t0 == BigInt("197970713723"));
  CHECK(p421.u0 == BigInt("9648502215"));
  CHECK(p421.t0 * p421.t0 - 421 * p421.u0 * p421.u0 == 4);

  // t0 for D = 409 runs past 64 bits
  PellSolution p = fundamental_pell(409);
  CHECK(p.t0 * p.t0 - 409 * p.u0 * p.u0 == 4);
  CHECK(p.log_eps > 50);
  CHECK(!fits_i64(p.t0));
  // eps = (t + sqrt(t^2-4))/2 = t (1 - O(t^-2)), so log eps = log t0 here
  CHECK(p.log_eps == doctest::Approx(log_bigint(p.t0)).epsilon(1e-12));
}

TEST_CASE("automorph_of matches the known action for <1,0,-2>") {
  Automorph s = automorph_of(QuadForm(1, 0, -2));
  // (x,y) -> (3x+4y, 2x+3y)
  CHECK(s.m11 == 3);
  CHECK(s.m12 == 4);
  CHECK(s.m21 == 2);
  CHECK(s.m22 == 3);
  CHECK(s.det() == 1);
  auto [zx, zy] = s.apply(0, 0);
  CHECK(zx == 0);
  CHECK(zy == 0);
}

TEST_CASE("automorph preserves the form exactly (symbolic check per form)") {
  for (i64 D : valid_discriminants(5, 150, 60)) {
    QuadForm f = principal_form(D);
    Automorph s = automorph_of(f);
    CHECK(s.det() == 1);
    // f(sigma(x,y)) has coefficients (a', b', c'); compare exactly
    BigInt a2 = f.a * s.m11 * s.m11 + f.b * s.m11 * s.m21 + f.c * s.m21 * s.m21;
    BigInt b2 =
        2 * f.a * s.m11 * s.m12 + f.b * (s.m11 * s.m22 + s.m12 * s.m21) + 2 * f.c * s.m21 * s.m22;
    BigInt c2 = f.a * s.m12 * s.m12 + f.b * s.m12 * s.m22 + f.c * s.m22 * s.m22;
    CHECK(a2 == f.a);
    CHECK(b2 == f.b);
    CHECK(c2 == f.c);
  }
  CHECK_THROWS_AS(automorph_of(QuadForm(-2, 0, 1)), std::invalid_argument);
}

TEST_CASE("fundamental_cone for <1,0,-2>") {
  FundamentalCone cone = fundamental_cone(QuadForm(1, 0, -2));
  CHECK(cone.theta_num == 2);
  CHECK(cone.theta_den == 3);
  CHECK(cone.contains(1, 0));       // included lower edge
  CHECK(!cone.contains(3, 2));      // excluded upper edge
  CHECK(cone.contains(3, 1));
  CHECK(cone.contains(5, 3));
  CHECK(!cone.contains(0, 0));
  CHECK(!cone.contains(2, 2));      // slope 1 > 2/3
  CHECK(!cone.contains(-1, 0));
  // boundary slope stays inside the positivity region
  BigInt pos = cone.form.a * cone.theta_den * cone.theta_den +
               cone.form.b * cone.theta_num * cone.theta_den +
               cone.form.c * cone.theta_num * cone.theta_num;
  CHECK(pos > 0);
}

TEST_CASE("cone properties across discriminants") {
  for (i64 D : valid_discriminants(5, 150, 60)) {
    QuadForm f = principal_form(D);
    FundamentalCone cone = fundamental_cone(f);
    CHECK(cone.theta_num > 0);
    CHECK(cone.theta_den > 0);
    CHECK(gcd(cone.theta_num, cone.theta_den) == 1);
    // automorph maps (1,0) onto the excluded edge
    auto [ex, ey] = cone.automorph.apply(1, 0);
    CHECK(ey * cone.theta_den == ex * cone.theta_num);
    CHECK(cone.contains(1, 0));
    CHECK(!cone.contains(ex, ey));
    BigInt pos = f.a * cone.theta_den * cone.theta_den + f.b * cone.theta_num * cone.theta_den +
                 f.c * cone.theta_num * cone.theta_num;
    CHECK(pos > 0);
  }
}

TEST_CASE("orbit_canonicalize examples for <1,0,-2>") {
  QuadForm f(1, 0, -2);
  FundamentalCone cone = fundamental_cone(f);
  CHECK(orbit_canonicalize(cone, 13, 9) == std::pair<i64, i64>{3, 1});
  CHECK(orbit_canonicalize(cone, -1, 0) == std::pair<i64, i64>{1, 0});
  CHECK(orbit_canonicalize(cone, 5, 3) == std::pair<i64, i64>{5, 3});
  CHECK_THROWS_AS(orbit_canonicalize(cone, 1, 1), std::invalid_argument);  // f = -1
  CHECK_THROWS_AS(orbit_canonicalize(cone, 0, 0), std::invalid_argument);
}

TEST_CASE("orbit tiling: canonicalization is a bijection onto cone points") {
  // test forms beyond the principal family
  std::vector<QuadForm> forms = {QuadForm(1, 0, -2), QuadForm(1, 1, -1), QuadForm(1, 1, -3),
                                 QuadForm(3, 2, -2), QuadForm(2, 1, -2)};
  for (const QuadForm &f : forms) {
    FundamentalCone cone = fundamental_cone(f);
    const Automorph &s = cone.automorph;
    const Automorph sinv = s.inverse();
    i64 n_max = 500;
    auto by_n = oracle::solutions_by_value(f, n_max, 10000, 10000);
    for (i64 n = 1; n <= n_max; ++n) {
      const auto &sols = by_n[static_cast<size_t>(n)];
      // canonical point per solution, plus explicit orbit enumeration
      std::map<std::pair<i64, i64>, std::set<size_t>> groups;
      std::vector<std::set<std::pair<BigInt, BigInt>>> orbits(sols.size());
      for (size_t i = 0; i < sols.size(); ++i) {
        auto [x, y] = sols[i];
        auto canon = orbit_canonicalize(cone, x, y);
        CHECK(cone.contains(canon.first, canon.second));
        CHECK(f.eval(canon.first, canon.second) == n);
        groups[canon].insert(i);
        // orbit of (x,y): +-sigma^k for |k| <= 30
        BigInt px = x, py = y;
        for (int k = 0; k <= 30; ++k) {
          orbits[i].insert({px, py});
          orbits[i].insert({-px, -py});
          auto [nx, ny] = s.apply(px, py);
          px = nx;
          py = ny;
        }
        px = x;
        py = y;
        for (int k = 0; k <= 30; ++k) {
          orbits[i].insert({px, py});
          orbits[i].insert({-px, -py});
          auto [nx, ny] = sinv.apply(px, py);
          px = nx;
          py = ny;
        }
      }
      // same canonical point iff same orbit
      for (size_t i = 0; i < sols.size(); ++i)
        for (size_t j = i + 1; j < sols.size(); ++j) {
          bool same_orbit = orbits[i].count({sols[j].first, sols[j].second}) > 0;
          auto ci = orbit_canonicalize(cone, sols[i].first, sols[i].second);
          auto cj = orbit_canonicalize(cone, sols[j].first, sols[j].second);
          CHECK(same_orbit == (ci == cj));
        }
    }
  }
}

TEST_CASE("vol_K0") {
  CHECK(vol_K0(QuadForm(1, 0, -2), 1.0) ==
        doctest::Approx(std::log(3 + 2 * std::sqrt(2.0)) / std::sqrt(8.0)).epsilon(1e-12));
  CHECK(vol_K0(QuadForm(1, 1, -1), 100.0) == doctest::Approx(100.0 * 0.9624236501 / std::sqrt(5.0)).epsilon(1e-9));
  // linear in N
  double v1 = vol_K0(QuadForm(1, 1, -3), 1.0);
  for (double N : {0.5, 2.0, 10.0, 1234.5}) {
    CHECK(vol_K0(QuadForm(1, 1, -3), N) == doctest::Approx(N * v1).epsilon(1e-12));
  }
}

TEST_CASE("Monte-Carlo style volume check for K0(N)") {
  // grid fraction of {cone, f <= N} inside [0,X]^2 approximates vol/X^2
  QuadForm f(1, 0, -2);
  FundamentalCone cone = fundamental_cone(f);
  double N = 40000.0;
  i64 X = 1200; // contains the region: x <= sqrt(9 N) = 600
  i64 hits = 0;
  for (i64 x = 0; x <= X; ++x)
    for (i64 y = 0; y <= X; ++y) {
      if (!cone.contains(x, y)) continue;
      i128 v = f.eval(x, y);
      if (v >= 1 && v <= static_cast<i128>(N)) ++hits;
    }
  double frac = static_cast<double>(hits) / (static_cast<double>(X + 1) * (X + 1));
  double expect = vol_K0(f, N) / (static_cast<double>(X) * X);
  CHECK(std::abs(frac - expect) / expect < 0.01);
}
