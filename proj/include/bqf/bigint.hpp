#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace bqf {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// natural log of a positive integer too large for a direct double conversion
double log_bigint(const BigInt &x);

double rat_to_double(const BigRat &r);

// "num/den" with den > 0, or plain "num" when den == 1
std::string rat_to_string(const BigRat &r);

bool fits_i64(const BigInt &x);

} // namespace bqf
