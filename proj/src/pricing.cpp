#include "loadgame/pricing.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "loadgame/errors.hpp"
#include "transcendental.hpp"

namespace loadgame {

namespace {

Rational integer_power(const Rational& base, unsigned long exponent) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational power(const Rational& y, const Rational& beta) {
  if (sgn(y) == 0) return Rational(0);
  if (beta.get_den() == 1 && beta.get_num().fits_ulong_p()) return integer_power(y, beta.get_num().get_ui());
  using detail::Decimal;
  return detail::to_rational(boost::multiprecision::pow(detail::to_decimal(y), detail::to_decimal(beta)));
}

}  // namespace

void validate_price_model(const PriceModel& model) {
  std::visit(
      [](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if (sgn(m.alpha) <= 0) throw ParameterError("price alpha must be > 0, got " + format_decimal(m.alpha));
        if constexpr (std::is_same_v<T, PowerLaw>) {
          if (m.beta < 1) throw ParameterError("price beta must be >= 1, got " + format_decimal(m.beta));
        }
      },
      model);
}

Price unit_price(const PriceModel& model, Energy load) {
  if (load < Energy{}) throw DomainError("negative slot load " + load.to_string() + " kWh");
  validate_price_model(model);
  if (load.is_zero()) return Price{};
  const Rational y = load.kwh();
  return std::visit(
      [&](const auto& m) -> Price {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, PowerLaw>) {
          return Price(Rational(m.alpha * power(y, m.beta)));
        } else {
          const auto ln = boost::multiprecision::log(detail::to_decimal(y) + 1);
          return Price(Rational(m.alpha * y * detail::to_rational(ln)));
        }
      },
      model);
}

PriceVector price_vector(const PriceModel& model, const LoadVector& total_load) {
  PriceVector p;
  p.reserve(total_load.size());
  for (Energy y : total_load) p.push_back(unit_price(model, y));
  return p;
}

Money slot_cost(const PriceModel& model, Energy load) { return cost_of(unit_price(model, load), load); }

ProductionCost production_cost(const PriceModel& model, const LoadVector& total_load) {
  ProductionCost c;
  c.per_slot.reserve(total_load.size());
  for (Energy y : total_load) {
    c.per_slot.push_back(slot_cost(model, y));
    c.total += c.per_slot.back();
  }
  return c;
}

}  // namespace loadgame
