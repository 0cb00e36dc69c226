#ifndef STIELTJES_ALTERNATING_HPP
#define STIELTJES_ALTERNATING_HPP

#include <functional>

#include "stieltjes/series_value.hpp"

namespace stieltjes {

/// sum_{k>=0} (-1)^k a_k using the Chebyshev weights of Cohen, Rodriguez
/// Villegas and Zagier with K terms. The error estimate
/// 3 (3+sqrt 8)^-K max|a_k| is sharp for totally monotone a_k.
SeriesValue accelerate_alternating(const std::function<Real(long)>& a, int K);

}  // namespace stieltjes

#endif  // STIELTJES_ALTERNATING_HPP
