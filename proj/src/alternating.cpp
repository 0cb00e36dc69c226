#include "stieltjes/alternating.hpp"

#include "stieltjes/errors.hpp"
#include "stieltjes/summation.hpp"

namespace stieltjes {

SeriesValue accelerate_alternating(const std::function<Real(long)>& a, int K) {
  if (K < 4) throw DomainError("accelerate_alternating needs K >= 4, got " + std::to_string(K));
  Real rate = Real(3) + sqrt(Real(8));
  Real d = pow(rate, static_cast<long>(K));
  d = (d + Real(1) / d) / 2;
  Real b(-1);
  Real c = -d;
  CompensatedSum s;
  Real biggest(0);
  for (long k = 0; k < K; ++k) {
    Real ak = a(k);
    biggest = max(biggest, abs(ak));
    c = b - c;
    s.add(c * ak);
    // b_{k+1} = b_k (k+K)(k-K) / ((k+1/2)(k+1))
    b = b * Real((k + K) * (k - K)) / (Real(2 * k + 1) * Real(k + 1) / 2);
  }
  Real value = s.value() / d;
  Real err = Real(3) * biggest / pow(rate, static_cast<long>(K)) +
             epsilon() * Real(K) * (abs(value) + biggest);
  return SeriesValue{std::move(value), std::move(err), K, "cvz-alternating"};
}

}  // namespace stieltjes
