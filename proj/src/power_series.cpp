#include "stieltjes/power_series.hpp"

#include <algorithm>

#include "stieltjes/errors.hpp"
#include "stieltjes/summation.hpp"

namespace stieltjes {

PowerSeries::PowerSeries(int order) : order_(order), c_(order + 1, Real(0)) {
  if (order < 0) throw DomainError("power series order must be >= 0");
}

PowerSeries::PowerSeries(std::vector<Real> coeffs, int order) : PowerSeries(order) {
  for (std::size_t j = 0; j < coeffs.size() && j <= static_cast<std::size_t>(order); ++j) c_[j] = coeffs[j];
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
  if (rhs.order_ < order_) {
    order_ = rhs.order_;
    c_.resize(order_ + 1);
  }
  for (int j = 0; j <= order_; ++j) c_[j] += rhs.c_[j];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const PowerSeries& rhs) {
  const int m = std::min(order_, rhs.order_);
  std::vector<Real> out(m + 1, Real(0));
  for (int k = 0; k <= m; ++k) {
    CompensatedSum s;
    for (int j = 0; j <= k; ++j) s.add(c_[j] * rhs.c_[k - j]);
    out[k] = s.value();
  }
  order_ = m;
  c_ = std::move(out);
  return *this;
}

PowerSeries PowerSeries::derivative() const {
  PowerSeries d(order_);
  for (int j = 1; j <= order_; ++j) d.c_[j - 1] = c_[j] * Real(j);
  return d;
}

PowerSeries PowerSeries::log() const {
  if (c_[0] != 1) throw DomainError("formal log needs constant coefficient 1");
  // g' f = f'  =>  k g_k = k f_k - sum_{j=1}^{k-1} j g_j f_{k-j}
  PowerSeries g(order_);
  for (int k = 1; k <= order_; ++k) {
    CompensatedSum s;
    s.add(Real(k) * c_[k]);
    for (int j = 1; j < k; ++j) s.add(-(Real(j) * g.c_[j] * c_[k - j]));
    g.c_[k] = s.value() / Real(k);
  }
  return g;
}

PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
PowerSeries operator*(PowerSeries a, const PowerSeries& b) { return a *= b; }

}  // namespace stieltjes
