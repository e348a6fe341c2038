#pragma once

// Exact numeric types. Energy is fixed point (milli-kWh); prices and money are
// GMP rationals so that table values, pro-rata shares and potential deltas
// compare with exact equality.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace loadgame {

using Rational = mpq_class;

// Parses "12", "-0.25", "3.000". No exponents, no thousands separators.
Rational parse_decimal(std::string_view text);

// Exact decimal rendering when the value terminates within max_places,
// otherwise rounded half away from zero to max_places.
std::string format_decimal(const Rational& value, int max_places = 12);

// Rounded half away from zero, always `places` fraction digits.
std::string format_fixed(const Rational& value, int places);

Rational round_half_up(const Rational& value, int places);

// num/den in lowest terms; GMP comparisons assume canonical operands.
inline Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::strong_ordering compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

class Energy {
 public:
  static constexpr std::int64_t kMilliPerKwh = 1000;

  constexpr Energy() = default;
  static constexpr Energy from_milli(std::int64_t milli) { return Energy(milli); }
  static constexpr Energy from_kwh(std::int64_t kwh) { return Energy(kwh * kMilliPerKwh); }
  // Throws DomainError when the value has more than three decimals.
  static Energy parse(std::string_view text);
  static Energy from_rational(const Rational& kwh);

  constexpr std::int64_t milli() const { return milli_; }
  Rational kwh() const { return ratio(milli_, kMilliPerKwh); }
  std::string to_string() const;

  constexpr bool is_zero() const { return milli_ == 0; }

  constexpr Energy& operator+=(Energy o) {
    milli_ += o.milli_;
    return *this;
  }
  constexpr Energy& operator-=(Energy o) {
    milli_ -= o.milli_;
    return *this;
  }
  friend constexpr Energy operator+(Energy a, Energy b) { return Energy(a.milli_ + b.milli_); }
  friend constexpr Energy operator-(Energy a, Energy b) { return Energy(a.milli_ - b.milli_); }
  friend constexpr Energy operator-(Energy a) { return Energy(-a.milli_); }
  friend constexpr Energy operator*(Energy a, std::int64_t k) { return Energy(a.milli_ * k); }
  friend constexpr Energy operator*(std::int64_t k, Energy a) { return Energy(a.milli_ * k); }
  friend constexpr auto operator<=>(Energy, Energy) = default;

 private:
  constexpr explicit Energy(std::int64_t milli) : milli_(milli) {}
  std::int64_t milli_ = 0;
};

using LoadVector = std::vector<Energy>;

LoadVector parse_loads(const std::vector<std::string>& texts);
Energy sum(const LoadVector& v);

// Rational quantity with a unit tag, so EUR and cEUR/kWh cannot be mixed.
template <class Tag>
class Exact {
 public:
  Exact() = default;
  explicit Exact(Rational v) : value_(std::move(v)) { value_.canonicalize(); }
  static Exact parse(std::string_view text) { return Exact(parse_decimal(text)); }

  const Rational& value() const { return value_; }
  std::string to_string(int max_places = 12) const { return format_decimal(value_, max_places); }
  std::string display(int places = 2) const { return format_fixed(value_, places); }

  Exact& operator+=(const Exact& o) {
    value_ += o.value_;
    return *this;
  }
  Exact& operator-=(const Exact& o) {
    value_ -= o.value_;
    return *this;
  }
  friend Exact operator+(const Exact& a, const Exact& b) { return Exact(Rational(a.value_ + b.value_)); }
  friend Exact operator-(const Exact& a, const Exact& b) { return Exact(Rational(a.value_ - b.value_)); }
  friend Exact operator-(const Exact& a) { return Exact(Rational(-a.value_)); }
  friend Exact operator*(const Exact& a, const Rational& k) { return Exact(Rational(a.value_ * k)); }
  friend Exact operator*(const Rational& k, const Exact& a) { return Exact(Rational(a.value_ * k)); }
  friend Exact operator/(const Exact& a, const Rational& k) { return Exact(Rational(a.value_ / k)); }
  friend Rational operator/(const Exact& a, const Exact& b) { return Rational(a.value_ / b.value_); }
  friend bool operator==(const Exact& a, const Exact& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Exact& a, const Exact& b) {
    return compare(a.value_, b.value_);
  }

 private:
  Rational value_{0};
};

struct MoneyTag {};
struct PriceTag {};
using Money = Exact<MoneyTag>;  // EUR
using Price = Exact<PriceTag>;  // cEUR per kWh

// price [cEUR/kWh] * energy [kWh] / 100 -> EUR
Money cost_of(const Price& price, Energy energy);

}  // namespace loadgame
