#ifndef STIELTJES_ERRORS_HPP
#define STIELTJES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stieltjes {

// Argument outside the region where a formula is defined (x <= 0, |x| > 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// s too close to the simple pole of the zeta function.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Root finder called with endpoints of equal sign.
class BracketError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Order or parameter beyond the implemented range.
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Iteration budget exhausted or a runtime sanity check failed.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace stieltjes

#endif  // STIELTJES_ERRORS_HPP
