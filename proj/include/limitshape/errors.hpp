#pragma once

#include <stdexcept>
#include <string>

namespace limitshape {

// Bad arguments: shapes that do not fit, non-monotone input, infeasible sizes.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A size limit (DP table, enumeration, exact arithmetic) would be exceeded.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace limitshape
