#pragma once

// Bridge between exact rationals and 50-digit decimal floats for the few
// non-algebraic quantities (log prices, fractional exponents, exp valuation).
// Results are rounded to 30 decimals before re-entering exact arithmetic, so
// they are reproducible across platforms.

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "loadgame/exact.hpp"

namespace loadgame::detail {

using Decimal = boost::multiprecision::cpp_dec_float_50;

inline constexpr int kTranscendentalPlaces = 30;

inline Decimal to_decimal(const Rational& q) {
  return Decimal(q.get_num().get_str()) / Decimal(q.get_den().get_str());
}

inline Rational to_rational(const Decimal& v) {
  const Decimal scaled = boost::multiprecision::round(v * boost::multiprecision::pow(Decimal(10), kTranscendentalPlaces));
  std::string digits = scaled.str(0, std::ios_base::fixed);
  if (const auto dot = digits.find('.'); dot != std::string::npos) digits.erase(dot);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, kTranscendentalPlaces);
  Rational r(mpz_class(digits, 10), den);
  r.canonicalize();
  return r;
}

}  // namespace loadgame::detail
