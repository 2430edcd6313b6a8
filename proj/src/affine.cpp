#include "bqf/affine.hpp"

#include <stdexcept>

namespace bqf {

AffineSystem::AffineSystem(std::vector<std::vector<i64>> linear_, std::vector<i64> constant_)
    : linear(std::move(linear_)), constant(std::move(constant_)) {
  if (linear.empty()) throw std::invalid_argument("AffineSystem: need t >= 1 forms");
  size_t d0 = linear.front().size();
  if (d0 == 0) throw std::invalid_argument("AffineSystem: need d >= 1 variables");
  for (const auto &row : linear)
    if (row.size() != d0) throw std::invalid_argument("AffineSystem: ragged linear matrix");
  if (constant.size() != linear.size())
    throw std::invalid_argument("AffineSystem: constant length must equal t");
}

i64 AffineSystem::eval(int i, const std::vector<i64> &n) const {
  if (n.size() != static_cast<size_t>(d()))
    throw std::invalid_argument("AffineSystem::eval: wrong dimension");
  i128 acc = constant[static_cast<size_t>(i)];
  const auto &row = linear[static_cast<size_t>(i)];
  for (size_t j = 0; j < row.size(); ++j) acc += static_cast<i128>(row[j]) * n[j];
  if (acc > INT64_MAX || acc < INT64_MIN) throw std::overflow_error("AffineSystem::eval: overflow");
  return static_cast<i64>(acc);
}

bool AffineSystem::rows_proportional(int i, int j) const {
  const auto &u = linear[static_cast<size_t>(i)];
  const auto &v = linear[static_cast<size_t>(j)];
  for (size_t p = 0; p < u.size(); ++p)
    for (size_t q = p + 1; q < u.size(); ++q) {
      i128 minor = static_cast<i128>(u[p]) * v[q] - static_cast<i128>(u[q]) * v[p];
      if (minor != 0) return false;
    }
  // all 2x2 minors vanish; for d = 1 this is every pair, including zero rows
  return true;
}

} // namespace bqf
