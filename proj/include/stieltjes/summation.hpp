#ifndef STIELTJES_SUMMATION_HPP
#define STIELTJES_SUMMATION_HPP

#include <span>

#include "stieltjes/ext_real.hpp"

namespace stieltjes {

// Neumaier's variant of Kahan summation: each addition is split into the
// rounded sum and its exact rounding error, which is carried separately.
class CompensatedSum {
 public:
  CompensatedSum();

  CompensatedSum& add(const Real& x);
  CompensatedSum& operator+=(const Real& x) { return add(x); }

  Real value() const;

 private:
  Real sum_;
  Real carry_;
};

/// Compensated sum in the given order. Empty input gives 0.
Real comp_sum(std::span<const Real> terms);

/// H_n = 1 + 1/2 + ... + 1/n. Throws DomainError for n == 0.
Real harmonic(long n);

}  // namespace stieltjes

#endif  // STIELTJES_SUMMATION_HPP
