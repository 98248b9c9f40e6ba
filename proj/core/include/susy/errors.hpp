#pragma once

#include <stdexcept>
#include <string>

namespace susy {

// Raised for inputs outside the admissible parameter set. `kind` names the
// violated constraint so callers can report it without parsing the message.
class ParameterError : public std::domain_error {
 public:
  enum class Kind { NonFinite, NonPositiveB, NonPositiveP, PNotLessThanB };

  ParameterError(Kind kind, const std::string& what)
      : std::domain_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// x <= 0 passed to a function defined on the open half-line.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Level index above the normalizable range.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Iterative numerical routine failed to converge or to bracket.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace susy
