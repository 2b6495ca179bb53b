#include "hyperlat/rational.hpp"

#include <stdexcept>

namespace hyperlat {

std::string to_string(const Rational& q) {
  const BigInt num = numerator(q);
  const BigInt den = denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
}

bool is_integer(const Rational& q) { return denominator(q) == 1; }

std::int64_t to_int64(const BigInt& z) {
  if (z > BigInt(INT64_MAX) || z < BigInt(INT64_MIN))
    throw std::overflow_error("integer does not fit in 64 bits: " + z.str());
  return static_cast<std::int64_t>(z);
}

std::int64_t floor_int(const Rational& q) {
  BigInt num = numerator(q);
  BigInt den = denominator(q);
  BigInt quot = num / den;  // truncates toward zero
  if (num < 0 && quot * den != num) quot -= 1;
  return to_int64(quot);
}

std::int64_t ceil_int(const Rational& q) { return -floor_int(-q); }

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace hyperlat
