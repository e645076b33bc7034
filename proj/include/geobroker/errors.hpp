#pragma once

#include <stdexcept>
#include <string>

namespace geobroker {

/// Malformed scenario file or a scenario that violates a model invariant.
class ScenarioError : public std::runtime_error {
 public:
  explicit ScenarioError(const std::string& what) : std::runtime_error(what) {}
};

/// Instance is too large for exhaustive enumeration.
class OracleLimitError : public std::runtime_error {
 public:
  explicit OracleLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace geobroker
