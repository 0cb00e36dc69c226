#include "stieltjes/series_value.hpp"

#include <algorithm>

#include "stieltjes/errors.hpp"

namespace stieltjes {

Real default_tolerance() { return pow10(-(working_digits() / 2)); }

int required_digits(int outer_digits, const Real& tol, int guard_digits) {
  return std::max(outer_digits, 2 * tolerance_digits(tol)) + guard_digits;
}

namespace {

Real checked_tolerance(const std::optional<Real>& tol) {
  if (!tol) return default_tolerance();
  if (!(*tol > 0) || tol->is_inf()) {
    throw DomainError("tolerance must be a positive finite number, got " + to_string(*tol, 6));
  }
  return *tol;
}

}  // namespace

WorkingPrecision::WorkingPrecision(const std::optional<Real>& tol, int guard_digits)
    : outer_(working_digits()),
      tol_(checked_tolerance(tol)),
      scope_(required_digits(outer_, tol_, guard_digits)) {}

SeriesValue WorkingPrecision::finish(SeriesValue v) const {
  PrecisionScope back(outer_);
  Real value = rounded(v.value);
  Real err = v.abs_err.is_inf() ? infinity() : rounded(abs(v.abs_err) + ulp(value));
  v.value = std::move(value);
  v.abs_err = std::move(err);
  v.terms_used = std::max<std::int64_t>(v.terms_used, 1);
  return v;
}

}  // namespace stieltjes
