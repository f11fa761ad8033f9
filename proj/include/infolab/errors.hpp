#pragma once

#include <stdexcept>
#include <string>

namespace infolab {

// Raised when an input violates a precondition of a closed form
// (non-positive precision, negative variance, negative k, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class SolverError : public std::runtime_error {
 public:
  enum class Kind { invalid_cost, no_bracket, residual };

  SolverError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// Malformed scenario file: bad JSON, unknown key, or a value that breaks a
// model invariant.
class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace infolab
