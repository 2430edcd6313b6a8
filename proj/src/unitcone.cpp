#include "bqf/unitcone.hpp"

#include <cmath>
#include <stdexcept>

namespace bqf {

namespace {

struct Mat2 {
  BigInt m11, m12, m21, m22;
};

Mat2 mul(const Mat2 &A, const Mat2 &B) {
  return {A.m11 * B.m11 + A.m12 * B.m21, A.m11 * B.m12 + A.m12 * B.m22,
          A.m21 * B.m11 + A.m22 * B.m21, A.m21 * B.m12 + A.m22 * B.m22};
}

// coefficients of f(m11 x + m12 y, m21 x + m22 y)
void transform_coeffs(const QuadForm &f, const Automorph &s, BigInt &a, BigInt &b, BigInt &c) {
  a = f.a * s.m11 * s.m11 + f.b * s.m11 * s.m21 + f.c * s.m21 * s.m21;
  b = 2 * f.a * s.m11 * s.m12 + f.b * (s.m11 * s.m22 + s.m12 * s.m21) + 2 * f.c * s.m21 * s.m22;
  c = f.a * s.m12 * s.m12 + f.b * s.m12 * s.m22 + f.c * s.m22 * s.m22;
}

bool preserves_form(const QuadForm &f, const Automorph &s) {
  BigInt a, b, c;
  transform_coeffs(f, s, a, b, c);
  return a == f.a && b == f.b && c == f.c;
}

void check_indefinite_disc(i64 D, const char *who) {
  if (D <= 0) throw std::invalid_argument(std::string(who) + ": D must be positive");
  i64 m4 = ((D % 4) + 4) % 4;
  if (m4 == 2 || m4 == 3) throw std::invalid_argument(std::string(who) + ": D must be 0 or 1 mod 4");
  if (is_square(static_cast<i128>(D))) throw std::invalid_argument(std::string(who) + ": D must not be a square");
}

} // namespace

bool FundamentalCone::contains(i64 x, i64 y) const {
  if (x < 1 || y < 0) return false;
  if (y == 0) return true;
  if (fits_i64(theta_num) && fits_i64(theta_den)) {
    i128 lhs = static_cast<i128>(y) * theta_den.convert_to<i64>();
    i128 rhs = static_cast<i128>(x) * theta_num.convert_to<i64>();
    return lhs < rhs;
  }
  return BigInt(y) * theta_den < BigInt(x) * theta_num;
}

bool FundamentalCone::contains(const BigInt &x, const BigInt &y) const {
  if (x < 1 || y < 0) return false;
  return y * theta_den < x * theta_num;
}

i64 FundamentalCone::min_x(i64 y) const {
  if (y <= 0) return 1;
  BigInt q = (BigInt(y) * theta_den) / theta_num; // both positive: truncation = floor
  BigInt x = q + 1;
  if (x < 1) x = 1;
  if (!fits_i64(x)) throw std::overflow_error("FundamentalCone::min_x: out of i64 range");
  return x.convert_to<i64>();
}

PellSolution fundamental_pell(i64 D) {
  check_indefinite_disc(D, "fundamental_pell");

  // principal form of discriminant D
  i64 b0 = (((D % 2) + 2) % 2);
  i64 a = 1, b = b0, c = static_cast<i64>((static_cast<i128>(b0) * b0 - D) / 4);

  // walk into the cycle of reduced forms
  int guard = 0;
  while (!detail::indefinite_reduced(a, b, D)) {
    detail::indefinite_rho_step(a, b, c, D);
    if (++guard > 100000) throw std::runtime_error("fundamental_pell: reduction did not terminate");
  }

  // one full trip around the cycle; the accumulated substitution generates
  // the proper automorphism group of the entry form
  const i64 ra = a, rb = b, rc = c;
  Mat2 M{1, 0, 0, 1};
  guard = 0;
  do {
    i64 b_before = b, c_before = c;
    detail::indefinite_rho_step(a, b, c, D);
    // rho = S then T^k with b' = -b + 2kc (c = leading coeff after S)
    i64 k = (b + b_before) / (2 * c_before);
    M = mul(M, Mat2{0, -1, 1, k});
    if (++guard > 1000000) throw std::runtime_error("fundamental_pell: cycle did not close");
  } while (!(a == ra && b == rb && c == rc));

  // M preserves <ra,rb,rc>, so M = +-[[(t-rb u)/2, -rc u], [ra u, (t+rb u)/2]]
  BigInt t = M.m11 + M.m22;
  BigInt u = M.m21 / ra;
  if (M.m21 % ra != 0) throw std::runtime_error("fundamental_pell: unexpected cycle matrix");
  if (t < 0) { t = -t; u = -u; }
  if (u < 0) u = -u; // (t,-u) is the inverse unit; same positive solution
  if (t * t - D * u * u != 4) throw std::runtime_error("fundamental_pell: cycle matrix is not a unit");

  PellSolution out;
  out.D = D;
  out.t0 = t;
  out.u0 = u;
  // eps = (t + u sqrt(D))/2; for large t this is tstar = t/2 * (1 + sqrt(1 - 4/t^2)) ~ t
  double td = fits_i64(t) ? static_cast<double>(t.convert_to<i64>()) : std::exp(log_bigint(t));
  if (td < 1e15) {
    double ud = u.convert_to<double>();
    out.log_eps = std::log((td + ud * std::sqrt(static_cast<double>(D))) / 2.0);
  } else {
    // u sqrt(D) = sqrt(t^2 - 4) ~ t; log eps = log t - log 2 + log(1 + sqrt(1-4/t^2))/...
    out.log_eps = log_bigint(t) - std::log(2.0) + std::log1p(std::sqrt(1.0 - 4.0 / (td * td)));
  }
  return out;
}

Automorph automorph_of(const QuadForm &f) {
  if (!is_normalized_indefinite(f))
    throw std::invalid_argument("automorph_of: form must be normalized (a > 0 > c)");
  PellSolution pell = fundamental_pell(f.D);
  // t0 = b u0 (mod 2) since t0^2 = D u0^2 + 4 and D = b^2 (mod 4)
  Automorph s{(pell.t0 - f.b * pell.u0) / 2, -f.c * pell.u0, f.a * pell.u0,
              (pell.t0 + f.b * pell.u0) / 2};
  if (s.det() != 1) throw std::runtime_error("automorph_of: determinant != 1");
  if (!preserves_form(f, s)) throw std::runtime_error("automorph_of: form not preserved");
  return s;
}

static FundamentalCone build_cone(const QuadForm &f, const Automorph &s) {
  // slope of the image of the ray {y=0, x>0}; try sigma, then sigma^{-1}
  for (const Automorph &cand : {s, s.inverse()}) {
    auto [x, y] = cand.apply(1, 0);
    if (x <= 0 || y <= 0) continue; // slope not strictly positive
    BigInt g = gcd(y, x);
    BigInt num = y / g, den = x / g;
    // boundary ray must stay inside {f > 0}: a den^2 + b num den + c num^2 > 0
    BigInt pos = f.a * den * den + f.b * num * den + f.c * num * num;
    if (pos <= 0) continue;
    return FundamentalCone{f, num, den, cand};
  }
  throw std::runtime_error("fundamental_cone: no admissible orientation");
}

FundamentalCone fundamental_cone(const QuadForm &f) {
  if (!is_normalized_indefinite(f))
    throw std::invalid_argument("fundamental_cone: form must be normalized (a > 0 > c)");
  return build_cone(f, automorph_of(f));
}

std::pair<i64, i64> orbit_canonicalize(const FundamentalCone &cone, i64 x, i64 y) {
  const QuadForm &f = cone.form;
  if (x == 0 && y == 0) throw std::invalid_argument("orbit_canonicalize: point must be nonzero");
  if (f.eval(x, y) <= 0) throw std::invalid_argument("orbit_canonicalize: f(p) must be positive");

  BigInt bx = x, by = y;
  // pick the component of {f > 0} containing (1,0): 2a x + b y > 0 there
  if (2 * f.a * bx + f.b * by < 0) { bx = -bx; by = -by; }

  const Automorph &s = cone.automorph;
  const Automorph sinv = s.inverse();
  for (int iter = 0; iter < 100000; ++iter) {
    if (by < 0) {
      auto [nx, ny] = s.apply(bx, by);
      bx = nx; by = ny;
      continue;
    }
    if (by * cone.theta_den >= bx * cone.theta_num) {
      auto [nx, ny] = sinv.apply(bx, by);
      bx = nx; by = ny;
      continue;
    }
    // in cone: 0 <= slope < theta
    if (!fits_i64(bx) || !fits_i64(by))
      throw std::overflow_error("orbit_canonicalize: representative out of i64 range");
    return {bx.convert_to<i64>(), by.convert_to<i64>()};
  }
  throw std::runtime_error("orbit_canonicalize: did not terminate");
}

std::pair<i64, i64> orbit_canonicalize(const QuadForm &f, i64 x, i64 y) {
  return orbit_canonicalize(fundamental_cone(f), x, y);
}

double vol_K0(const QuadForm &f, double N) {
  if (!is_normalized_indefinite(f))
    throw std::invalid_argument("vol_K0: form must be normalized (a > 0 > c)");
  PellSolution pell = fundamental_pell(f.D);
  return N * pell.log_eps / std::sqrt(static_cast<double>(f.D));
}

} // namespace bqf
