#pragma once

#include "bqf/int128.hpp"

namespace bqf {

// runtime resource caps; set once at startup (CLI reads BQF_TABLE_CAP)
struct Caps {
  i64 table_entries = 100'000'000; // rep-table size refusal threshold
  i64 density_modulus = 10'000;    // largest q for a direct q^2 density sweep
  i64 betap_cost = 10'000'000;     // largest p^(m d) average to attempt
  int threads = 1;                 // worker count for partitionable sweeps
};

Caps &caps();

} // namespace bqf
