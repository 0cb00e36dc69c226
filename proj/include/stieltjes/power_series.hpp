#ifndef STIELTJES_POWER_SERIES_HPP
#define STIELTJES_POWER_SERIES_HPP

#include <vector>

#include "stieltjes/ext_real.hpp"

namespace stieltjes {

/// Truncated power series c_0 + c_1 w + ... + c_M w^M.
class PowerSeries {
 public:
  explicit PowerSeries(int order);
  PowerSeries(std::vector<Real> coeffs, int order);

  int order() const noexcept { return order_; }
  const Real& operator[](int j) const { return c_.at(j); }
  Real& operator[](int j) { return c_.at(j); }
  const std::vector<Real>& coefficients() const noexcept { return c_; }

  PowerSeries& operator+=(const PowerSeries& rhs);
  PowerSeries& operator*=(const PowerSeries& rhs);

  /// Formal derivative; the w^M coefficient of the result is 0.
  PowerSeries derivative() const;

  /// Formal logarithm, defined when c_0 == 1.
  PowerSeries log() const;

 private:
  int order_;
  std::vector<Real> c_;
};

PowerSeries operator+(PowerSeries a, const PowerSeries& b);
PowerSeries operator*(PowerSeries a, const PowerSeries& b);

}  // namespace stieltjes

#endif  // STIELTJES_POWER_SERIES_HPP
