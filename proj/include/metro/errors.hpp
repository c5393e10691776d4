#ifndef METRO_ERRORS_HPP
#define METRO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace metro {

// Input data failed validation (bad file, dangling reference, violated
// precondition reachable from user data).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numeric computation produced a non-finite value or failed to converge.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No augmentation satisfying the constraints exists. Carries the largest
// edge connectivity achievable under the given constraints.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(const std::string& msg, int best_achievable)
      : std::runtime_error(msg), best_achievable_(best_achievable) {}

  int best_achievable() const { return best_achievable_; }

 private:
  int best_achievable_;
};

}  // namespace metro

#endif
