#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace loadgame {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Vector lengths disagree with the time grid.
struct DimensionError : Error {
  using Error::Error;
};

// Argument outside the domain of a function (negative load, zero total, ...).
struct DomainError : Error {
  using Error::Error;
};

// Model parameter violates its declared invariant.
struct ParameterError : DomainError {
  using DomainError::DomainError;
};

struct InfeasibleError : Error {
  InfeasibleError(std::string appliance, const std::string& what)
      : Error(what), appliance_id(std::move(appliance)) {}
  std::string appliance_id;
};

// Combinatorial guard tripped; `product` is the computed size.
struct SizeError : Error {
  SizeError(std::uint64_t size, const std::string& what) : Error(what), product(size) {}
  std::uint64_t product;
};

struct MissingPlayerError : Error {
  using Error::Error;
};

struct MisuseError : Error {
  using Error::Error;
};

struct ScenarioError : Error {
  using Error::Error;
};

}  // namespace loadgame
