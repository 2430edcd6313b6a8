#include "bqf/bigint.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace bqf {

double log_bigint(const BigInt &x) {
  if (x <= 0) throw std::domain_error("log_bigint: argument must be positive");
  unsigned bits = static_cast<unsigned>(msb(x));
  if (bits <= 900) return std::log(x.convert_to<double>());
  // take the top 64 bits as mantissa, account for the shift
  unsigned shift = bits - 63;
  BigInt top = x >> shift;
  return std::log(top.convert_to<double>()) + shift * std::log(2.0);
}

double rat_to_double(const BigRat &r) {
  BigInt n = numerator(r), d = denominator(r);
  if (n == 0) return 0.0;
  bool neg = n < 0;
  if (neg) n = -n;
  long nb = n == 0 ? 0 : static_cast<long>(msb(n));
  long db = static_cast<long>(msb(d));
  if (nb < 900 && db < 900) {
    double v = n.convert_to<double>() / d.convert_to<double>();
    return neg ? -v : v;
  }
  double v = std::exp(log_bigint(n) - log_bigint(d));
  return neg ? -v : v;
}

std::string rat_to_string(const BigRat &r) {
  BigInt n = numerator(r), d = denominator(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

bool fits_i64(const BigInt &x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

} // namespace bqf
