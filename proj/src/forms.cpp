#include "bqf/forms.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace bqf {

namespace {

constexpr i64 kCoeffLimit = 1'000'000'000; // keeps D = b^2-4ac inside i64

i64 checked_i64(i128 v, const char *what) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error(what);
  return static_cast<i64>(v);
}

// one rho step of the classical indefinite reduction:
// <a,b,c> -> <c, b', (b'^2 - D)/(4c)> with b' = -b + 2kc chosen in the
// standard window (-|c|, |c|] if |c| > sqrt(D), else (sqrt(D)-2|c|, sqrt(D)).
void rho_step(i64 &a, i64 &b, i64 &c, i64 D) {
  i64 s = static_cast<i64>(isqrt(static_cast<u64>(D)));
  i64 ac = c < 0 ? -c : c;
  i64 two_ac = 2 * ac;
  i64 r = ((-b) % two_ac + two_ac) % two_ac; // -b mod 2|c| in [0, 2|c|)
  i64 bp;
  if (ac > s) {
    bp = r > ac ? r - two_ac : r;
  } else {
    bp = s - ((s - r) % two_ac + two_ac) % two_ac;
  }
  i128 cp = (static_cast<i128>(bp) * bp - D) / (4 * static_cast<i128>(c));
  a = c;
  b = bp;
  c = checked_i64(cp, "rho_step: coefficient overflow");
}

bool is_reduced_indefinite(i64 a, i64 b, i64 D) {
  i64 s = static_cast<i64>(isqrt(static_cast<u64>(D)));
  i64 aa = a < 0 ? -a : a;
  return b >= 1 && b <= s && b + 2 * aa >= s + 1 && 2 * aa <= b + s;
}

} // namespace

QuadForm::QuadForm(i64 a_, i64 b_, i64 c_) : a(a_), b(b_), c(c_), D(0) {
  if (std::abs(a) > kCoeffLimit || std::abs(b) > kCoeffLimit || std::abs(c) > kCoeffLimit)
    throw std::invalid_argument("QuadForm: coefficients exceed 10^9");
  i64 g = std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c));
  if (g != 1) throw std::invalid_argument("QuadForm: form must be primitive");
  i128 disc = static_cast<i128>(b) * b - 4 * static_cast<i128>(a) * c;
  if (is_square(disc)) throw std::invalid_argument("QuadForm: discriminant must not be a square");
  D = checked_i64(disc, "QuadForm: discriminant overflow");
}

FormClass classify(const QuadForm &f) {
  if (f.D > 0) return FormClass::Indefinite;
  return f.a > 0 ? FormClass::PositiveDefinite : FormClass::NegativeDefinite;
}

const char *form_class_name(FormClass c) {
  switch (c) {
    case FormClass::PositiveDefinite: return "positive_definite";
    case FormClass::NegativeDefinite: return "negative_definite";
    case FormClass::Indefinite: return "indefinite";
  }
  return "?";
}

QuadForm negate(const QuadForm &f) { return {-f.a, -f.b, -f.c}; }

QuadForm reduce_definite(QuadForm f) {
  if (classify(f) != FormClass::PositiveDefinite)
    throw std::invalid_argument("reduce_definite: form must be positive definite");
  i64 a = f.a, b = f.b, c = f.c;
  for (int iter = 0; iter < 10000; ++iter) {
    // translate b into (-a, a]
    i64 two_a = 2 * a;
    i64 r = (b % two_a + two_a) % two_a;
    if (r > a) r -= two_a;
    if (r != b) {
      i64 k = (r - b) / two_a;
      i128 cp = static_cast<i128>(a) * k * k + static_cast<i128>(b) * k + c;
      b = r;
      c = checked_i64(cp, "reduce_definite: overflow");
    }
    if (a > c) {
      i64 t = a;
      a = c;
      c = t;
      b = -b;
      continue;
    }
    if (a == c && b < 0) b = -b;
    if (-a < b && b <= a && a <= c) return {a, b, c};
  }
  throw std::runtime_error("reduce_definite: did not terminate");
}

QuadForm normalize_indefinite(QuadForm f) {
  if (classify(f) != FormClass::Indefinite)
    throw std::invalid_argument("normalize_indefinite: form must be indefinite");
  i64 a = f.a, b = f.b, c = f.c;
  int guard = 0;
  while (a * static_cast<i128>(c) > 0) {
    rho_step(a, b, c, f.D);
    if (++guard > 10000) throw std::runtime_error("normalize_indefinite: did not terminate");
  }
  if (a < 0) {
    // swap substitution (x,y) -> (-y,x)
    i64 t = a;
    a = c;
    c = t;
    b = -b;
  }
  return {a, b, c};
}

bool is_normalized_indefinite(const QuadForm &f) { return f.D > 0 && f.a > 0 && f.c < 0; }

namespace detail {

void indefinite_rho_step(i64 &a, i64 &b, i64 &c, i64 D) { rho_step(a, b, c, D); }
bool indefinite_reduced(i64 a, i64 b, i64 D) { return is_reduced_indefinite(a, b, D); }

} // namespace detail

QuadForm parse_form(const std::string &s) {
  i64 v[3];
  size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    size_t comma = i < 2 ? s.find(',', pos) : s.size();
    if (comma == std::string::npos) throw std::invalid_argument("parse_form: expected \"a,b,c\"");
    std::string part = s.substr(pos, comma - pos);
    size_t used = 0;
    try {
      v[i] = std::stoll(part, &used);
    } catch (const std::exception &) {
      throw std::invalid_argument("parse_form: bad integer \"" + part + "\"");
    }
    while (used < part.size() && std::isspace(static_cast<unsigned char>(part[used]))) ++used;
    if (used != part.size()) throw std::invalid_argument("parse_form: bad integer \"" + part + "\"");
    pos = comma + 1;
  }
  return {v[0], v[1], v[2]};
}

std::string format_form(const QuadForm &f) {
  return std::to_string(f.a) + "," + std::to_string(f.b) + "," + std::to_string(f.c);
}

} // namespace bqf
