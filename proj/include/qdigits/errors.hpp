#pragma once

#include <stdexcept>
#include <string>

namespace qdigits {

// Argument lies outside the set an operation is defined on (off-lattice value,
// digit index out of range, incompatible boundary condition, ...).
class DomainError : public std::domain_error {
  public:
    explicit DomainError(const std::string &what) : std::domain_error(what) {}
};

// Operand is well-formed but the requested route does not support it
// (e.g. non-q-adic rational, method 1 on a ternary lattice).
class UnsupportedOperand : public std::invalid_argument {
  public:
    explicit UnsupportedOperand(const std::string &what) : std::invalid_argument(what) {}
};

class DimensionMismatch : public std::invalid_argument {
  public:
    explicit DimensionMismatch(const std::string &what) : std::invalid_argument(what) {}
};

} // namespace qdigits
