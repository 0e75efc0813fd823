#pragma once

#include <stdexcept>
#include <string>

namespace xxz {

/// Evaluation requested at or too close to a pole of a kernel or special function.
struct pole_error : std::domain_error {
  explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

/// A truncated quadrature could not meet its accuracy criterion.
struct accuracy_error : std::runtime_error {
  explicit accuracy_error(const std::string& what) : std::runtime_error(what) {}
};

/// The discretized linear system was numerically singular (indicates a discretization bug).
struct singular_system_error : std::runtime_error {
  explicit singular_system_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace xxz
