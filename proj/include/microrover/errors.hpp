#pragma once

#include <stdexcept>
#include <string>

namespace microrover {

// Input outside the domain a model or table is defined on (frequency outside
// a transmitter curve, energy outside the attenuation table, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Catalog / config document that parses but violates the schema or an
// invariant. field() names the offending key.
class SchemaError : public std::runtime_error {
public:
  SchemaError(std::string field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

private:
  std::string field_;
};

inline void require_positive(double v, const char* name) {
  if (!(v > 0.0)) {
    throw std::invalid_argument(std::string(name) + " must be positive");
  }
}

inline void require_non_negative(double v, const char* name) {
  if (!(v >= 0.0)) {
    throw std::invalid_argument(std::string(name) + " must be non-negative");
  }
}

} // namespace microrover
