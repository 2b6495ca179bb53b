#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperlat {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// "p/q" or "p"; denominators are always positive after normalisation.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

bool is_integer(const Rational& q);
std::int64_t to_int64(const BigInt& z);  // throws std::overflow_error
std::int64_t floor_int(const Rational& q);
std::int64_t ceil_int(const Rational& q);
double to_double(const Rational& q);

}  // namespace hyperlat
