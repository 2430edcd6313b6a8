#pragma once

#include "bqf/correlation.hpp"

#include <string>
#include <vector>

namespace bqf {

// correlation experiment description:
// { "forms": ["a,b,c", ...], "linear": [[...], ...], "constant": [...],
//   "box": [[lo, hi], ...] }
// box bounds are numbers (converted exactly) or "p/q" strings
struct SystemConfig {
  std::vector<QuadForm> forms;
  AffineSystem system;
  Box box;
};

SystemConfig parse_system_config(const std::string &json_text);
SystemConfig load_system_config(const std::string &path);

// CorrelationReport as a JSON document: stable lexicographic key order,
// doubles rounded to 12 significant digits, rationals as "num/den" strings
std::string report_to_json(const CorrelationReport &rep);

} // namespace bqf
