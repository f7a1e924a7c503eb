#pragma once

#include <stdexcept>
#include <string>

namespace satotate {

// Raised when a request exceeds a configured memory or work budget.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an operation is called outside the hypotheses its formula
// was derived under (e.g. M < 8 for the coefficient-sum ceilings).
class HypothesisError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved)
      : std::runtime_error(what + " (achieved error estimate " +
                           std::to_string(achieved) + ")"),
        achieved_(achieved) {}

  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace satotate
