#pragma once

#include "bqf/int128.hpp"

#include <vector>

namespace bqf {

// psi_i(n) = sum_j linear[i][j] n_j + constant[i], mapping Z^d -> Z^t
struct AffineSystem {
  std::vector<std::vector<i64>> linear; // t rows, d columns
  std::vector<i64> constant;            // length t

  AffineSystem(std::vector<std::vector<i64>> linear_, std::vector<i64> constant_);

  int t() const { return static_cast<int>(linear.size()); }
  int d() const { return static_cast<int>(linear.front().size()); }

  i64 eval(int i, const std::vector<i64> &n) const;

  // rows i and j proportional over Q (zero rows count as proportional)
  bool rows_proportional(int i, int j) const;
};

} // namespace bqf
