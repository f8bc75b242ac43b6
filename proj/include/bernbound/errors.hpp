#pragma once

#include <stdexcept>
#include <string>

namespace bernbound {

/// Argument outside the mathematical domain of an operation (log of a
/// non-positive enclosure, division by an enclosure containing zero, a
/// bound evaluated at k outside its validity range).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Missing or out-of-range bound parameter (m, n, a, alpha, beta).
class ParamError : public std::invalid_argument {
 public:
  explicit ParamError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace bernbound
