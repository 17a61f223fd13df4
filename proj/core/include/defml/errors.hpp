#pragma once

#include <stdexcept>
#include <string>

namespace defml {

/// An iterative numeric procedure did not reach the requested accuracy
/// within its refinement budget. Carries the best estimate achieved.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& msg, double achieved)
      : std::runtime_error(msg), achieved_(achieved) {}
  double achieved_estimate() const { return achieved_; }

 private:
  double achieved_;
};

/// Two routes that must agree exactly produced different results, or an
/// exact transform left a residue that should have cancelled.
class InternalConsistencyError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace defml
