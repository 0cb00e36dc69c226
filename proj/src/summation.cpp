#include "stieltjes/summation.hpp"

#include "stieltjes/errors.hpp"

namespace stieltjes {

CompensatedSum::CompensatedSum() : sum_(0), carry_(0) {}

CompensatedSum& CompensatedSum::add(const Real& x) {
  Real t = sum_ + x;
  if (abs(sum_) >= abs(x)) {
    carry_ += (sum_ - t) + x;
  } else {
    carry_ += (x - t) + sum_;
  }
  sum_ = std::move(t);
  return *this;
}

Real CompensatedSum::value() const { return sum_ + carry_; }

Real comp_sum(std::span<const Real> terms) {
  CompensatedSum acc;
  for (const Real& t : terms) acc.add(t);
  return acc.value();
}

Real harmonic(long n) {
  if (n < 1) throw DomainError("harmonic(n) needs n >= 1, got " + std::to_string(n));
  CompensatedSum acc;
  Real one(1);
  for (long k = 1; k <= n; ++k) acc.add(one / Real(k));
  return acc.value();
}

}  // namespace stieltjes
