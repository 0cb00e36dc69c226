#ifndef STIELTJES_BERNOULLI_HPP
#define STIELTJES_BERNOULLI_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "stieltjes/ext_real.hpp"

namespace stieltjes {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr int kMaxBernoulliIndex = 160;

/// Exact B_k for even 2 <= k <= kMaxBernoulliIndex (B_2 = 1/6, B_4 = -1/30, ...).
const Rational& bernoulli(int index);

/// B_{2j} / (2j)! at the working precision, j >= 1.
Real bernoulli_over_factorial(int j);

Real to_real(const Rational& q);

}  // namespace stieltjes

#endif  // STIELTJES_BERNOULLI_HPP
