#pragma once

#include <stdexcept>
#include <string>

namespace egg {

/// Thrown when an argument lies outside the domain of the requested function.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace egg
