#include "loadgame/exact.hpp"

#include <cctype>
#include <string>

#include "loadgame/errors.hpp"

namespace loadgame {

namespace {

mpz_class pow10(int n) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(n));
  return r;
}

// Scaled integer of |value| * 10^places, rounded half away from zero.
mpz_class scaled_round(const Rational& value, int places) {
  const mpz_class scale = pow10(places);
  mpz_class num = abs(value.get_num()) * scale;
  const mpz_class& den = value.get_den();
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (2 * r >= den) ++q;
  return q;
}

std::string render_scaled(const mpz_class& scaled, int places, bool negative) {
  std::string digits = scaled.get_str();
  if (static_cast<int>(digits.size()) <= places) {
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  }
  std::string out;
  if (negative && scaled != 0) out.push_back('-');
  out += digits.substr(0, digits.size() - static_cast<std::size_t>(places));
  if (places > 0) {
    out.push_back('.');
    out += digits.substr(digits.size() - static_cast<std::size_t>(places));
  }
  return out;
}

}  // namespace

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto dot = s.find('.');
  const std::string_view whole = s.substr(0, dot);
  const std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  auto all_digits = [](std::string_view d) {
    for (char c : d)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  if (whole.empty() || !all_digits(whole) || !all_digits(frac) ||
      (dot != std::string_view::npos && frac.empty())) {
    throw DomainError("not a decimal number: '" + std::string(text) + "'");
  }
  mpz_class num(std::string(whole) + std::string(frac), 10);
  Rational r(num, pow10(static_cast<int>(frac.size())));
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string format_decimal(const Rational& value, int max_places) {
  // Terminating iff the reduced denominator has only factors 2 and 5.
  mpz_class den = value.get_den();
  int twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  int places = max_places;
  if (den == 1) places = std::min(std::max(twos, fives), max_places);
  std::string out = render_scaled(scaled_round(value, places), places, sgn(value) < 0);
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  if (out == "-0") out = "0";
  return out;
}

std::string format_fixed(const Rational& value, int places) {
  return render_scaled(scaled_round(value, places), places, sgn(value) < 0);
}

Rational round_half_up(const Rational& value, int places) {
  Rational r(scaled_round(value, places), pow10(places));
  r.canonicalize();
  return sgn(value) < 0 ? Rational(-r) : r;
}

Energy Energy::parse(std::string_view text) {
  return from_rational(parse_decimal(text));
}

Energy Energy::from_rational(const Rational& kwh) {
  Rational milli = kwh * kMilliPerKwh;
  milli.canonicalize();
  if (milli.get_den() != 1 || !milli.get_num().fits_slong_p()) {
    throw DomainError("energy " + format_decimal(kwh) + " kWh is not a whole number of milli-kWh");
  }
  return Energy(milli.get_num().get_si());
}

std::string Energy::to_string() const { return format_decimal(kwh(), 3); }

LoadVector parse_loads(const std::vector<std::string>& texts) {
  LoadVector out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(Energy::parse(t));
  return out;
}

Energy sum(const LoadVector& v) {
  Energy s;
  for (Energy e : v) s += e;
  return s;
}

Money cost_of(const Price& price, Energy energy) {
  return Money(Rational(price.value() * energy.kwh() / 100));
}

}  // namespace loadgame
