#pragma once

#include "bqf/int128.hpp"

#include <string>

namespace bqf {

enum class FormClass { PositiveDefinite, NegativeDefinite, Indefinite };

// The integral binary quadratic form ax^2 + bxy + cy^2 = <a,b,c>.
// Construction enforces primitivity (gcd(a,b,c)=1) and a non-square
// discriminant, so the form is irreducible over Q and represents 0 only
// trivially.
struct QuadForm {
  i64 a, b, c;
  i64 D; // b^2 - 4ac, cached

  QuadForm(i64 a, i64 b, i64 c);

  bool operator==(const QuadForm &o) const { return a == o.a && b == o.b && c == o.c; }
  bool operator!=(const QuadForm &o) const { return !(*this == o); }

  i128 eval(i128 x, i128 y) const { return a * x * x + b * x * y + c * y * y; }
};

FormClass classify(const QuadForm &f);

const char *form_class_name(FormClass c);

// <-a,-b,-c>; same discriminant
QuadForm negate(const QuadForm &f);

// Gauss reduction of a positive definite form: the equivalent form with
// -a < b <= a <= c (and b >= 0 if a == c). Rejects non-positive-definite input.
QuadForm reduce_definite(QuadForm f);

// Equivalent indefinite form with a > 0 > c (|b| < sqrt(D) follows).
// Rejects definite input.
QuadForm normalize_indefinite(QuadForm f);

bool is_normalized_indefinite(const QuadForm &f);

// "a,b,c" with signed decimal integers
QuadForm parse_form(const std::string &s);
std::string format_form(const QuadForm &f);

namespace detail {
// shared with the unit-group cycle computation
void indefinite_rho_step(i64 &a, i64 &b, i64 &c, i64 D);
bool indefinite_reduced(i64 a, i64 b, i64 D);
} // namespace detail

} // namespace bqf
