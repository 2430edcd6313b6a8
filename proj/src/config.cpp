#include "bqf/config.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bqf {

namespace {

using nlohmann::json;

Rat64 parse_bound(const json &v) {
  if (v.is_number_integer()) return {v.get<i64>(), 1};
  if (v.is_number_float()) return Rat64::from_double(v.get<double>());
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    size_t slash = s.find('/');
    if (slash == std::string::npos) return {std::stoll(s), 1};
    return {std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))};
  }
  throw std::invalid_argument("config: box bound must be a number or \"p/q\"");
}

// round-trip through %.12g: fixed significance, deterministic text
double sig12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::strtod(buf, nullptr);
}

} // namespace

SystemConfig parse_system_config(const std::string &json_text) {
  json j = json::parse(json_text);
  for (const char *key : {"forms", "linear", "constant", "box"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("config: missing \"") + key + "\"");

  std::vector<QuadForm> forms;
  for (const auto &s : j.at("forms")) forms.push_back(parse_form(s.get<std::string>()));

  std::vector<std::vector<i64>> linear;
  for (const auto &row : j.at("linear")) linear.push_back(row.get<std::vector<i64>>());
  std::vector<i64> constant = j.at("constant").get<std::vector<i64>>();
  AffineSystem system(std::move(linear), std::move(constant));

  std::vector<std::pair<Rat64, Rat64>> bounds;
  for (const auto &pair : j.at("box")) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("config: each box entry must be [lo, hi]");
    bounds.emplace_back(parse_bound(pair[0]), parse_bound(pair[1]));
  }
  Box box(std::move(bounds));

  if (forms.size() != static_cast<size_t>(system.t()))
    throw std::invalid_argument("config: forms and linear row count differ");
  if (box.d() != system.d())
    throw std::invalid_argument("config: box dimension and linear column count differ");
  return {std::move(forms), std::move(system), std::move(box)};
}

SystemConfig load_system_config(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_system_config(ss.str());
}

std::string report_to_json(const CorrelationReport &rep) {
  json j;
  j["N"] = rep.N;
  j["beta_inf"] = sig12(rep.beta_inf_value);
  if (rep.empirical >= INT64_MIN && rep.empirical <= INT64_MAX)
    j["empirical_sum"] = static_cast<i64>(rep.empirical);
  else
    j["empirical_sum"] = i128_to_string(rep.empirical);
  json factors = json::array();
  for (const LocalFactor &lf : rep.series.factors) {
    json f;
    f["m_used"] = lf.m_used;
    f["p"] = lf.prime;
    f["stabilized"] = lf.stabilized;
    f["value"] = rat_to_string(lf.value);
    f["value_real"] = sig12(rat_to_double(lf.value));
    factors.push_back(std::move(f));
  }
  j["local_factors"] = std::move(factors);
  j["m_max"] = rep.m_max;
  j["p_max"] = rep.p_max;
  j["predicted"] = sig12(rep.predicted);
  j["relative_error"] = sig12(rep.relative_error);
  j["singular_series"] = rat_to_string(rep.series.product);
  j["singular_series_real"] = sig12(rat_to_double(rep.series.product));
  json timings;
  timings["empirical_ms"] = sig12(rep.ms_empirical);
  timings["prediction_ms"] = sig12(rep.ms_prediction);
  j["timings"] = std::move(timings);
  return j.dump();
}

} // namespace bqf
