#ifndef STIELTJES_SERIES_VALUE_HPP
#define STIELTJES_SERIES_VALUE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "stieltjes/ext_real.hpp"

namespace stieltjes {

/// Value of a series together with a claimed bound on its total error.
/// abs_err == +inf marks a value that carries no error claim.
struct SeriesValue {
  Real value;
  Real abs_err;
  std::int64_t terms_used = 1;
  std::string method;
};

/// Tolerance used when the caller does not supply one: 10^-(P/2).
Real default_tolerance();

/// Raises the working precision for the lifetime of the object so that it is
/// at least twice the digits asked for by `tol`, plus guard digits. The
/// caller's precision is remembered for rounding the result on the way out.
class WorkingPrecision {
 public:
  explicit WorkingPrecision(const std::optional<Real>& tol, int guard_digits = 16);

  const Real& tolerance() const noexcept { return tol_; }
  int outer_digits() const noexcept { return outer_; }

  /// Rounds `v` to the caller's precision and widens abs_err by that rounding.
  SeriesValue finish(SeriesValue v) const;

 private:
  int outer_;
  Real tol_;
  PrecisionScope scope_;
};

int required_digits(int outer_digits, const Real& tol, int guard_digits);

}  // namespace stieltjes

#endif  // STIELTJES_SERIES_VALUE_HPP
