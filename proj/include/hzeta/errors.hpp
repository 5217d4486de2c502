#ifndef HZETA_ERRORS_HPP
#define HZETA_ERRORS_HPP

#include <stdexcept>

namespace hzeta {

// Numeric evaluation cannot deliver the accuracy the configuration promises.
struct precision_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An iterative refinement failed to reach its tolerance.
struct convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exact computation would exceed the configured resource budget.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hzeta

#endif
