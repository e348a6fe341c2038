#pragma once

#include <variant>
#include <vector>

#include "loadgame/exact.hpp"

namespace loadgame {

/// f(y) = alpha * y^beta, alpha > 0, beta >= 1.
struct PowerLaw {
  Rational alpha{1};
  Rational beta{2};
};

/// f(y) = alpha * y * ln(y + 1), alpha > 0.
struct LoadLog {
  Rational alpha{1};
};

using PriceModel = std::variant<PowerLaw, LoadLog>;

// Throws ParameterError naming the violated bound.
void validate_price_model(const PriceModel& model);

// Unit price in cEUR/kWh at slot load y (kWh). Negative load -> DomainError.
Price unit_price(const PriceModel& model, Energy load);

using PriceVector = std::vector<Price>;

PriceVector price_vector(const PriceModel& model, const LoadVector& total_load);

// Production cost of one slot: f(L) * L / 100 EUR.
Money slot_cost(const PriceModel& model, Energy load);

struct ProductionCost {
  std::vector<Money> per_slot;
  Money total;  // the potential
};

ProductionCost production_cost(const PriceModel& model, const LoadVector& total_load);

}  // namespace loadgame
