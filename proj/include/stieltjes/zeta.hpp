#ifndef STIELTJES_ZETA_HPP
#define STIELTJES_ZETA_HPP

#include <optional>

#include "stieltjes/series_value.hpp"

namespace stieltjes {

/// Hurwitz zeta through Hasse's globally convergent double series
///   zeta(s,x) = 1/(s-1) sum_n 1/(n+1) sum_k (-1)^k C(n,k) (x+k)^(1-s).
/// x is first shifted up by the exact recurrence so that the outer sum
/// decays fast. Stops after five consecutive outer terms below tol/10.
/// Throws PoleError for |s-1| <= 1e-6 and DomainError for x <= 0.
SeriesValue hurwitz_hasse(const Real& s, const Real& x, const std::optional<Real>& tol = {});

/// Hurwitz zeta by Euler-Maclaurin summation: direct terms to N, then
/// (N+x)^(1-s)/(s-1) + (N+x)^(-s)/2 + Bernoulli corrections. Valid for all
/// real s != 1; exact apart from rounding for non-positive integer s.
SeriesValue hurwitz_em(const Real& s, const Real& x, const std::optional<Real>& tol = {});

/// zeta^(k+1)(0,x) - zeta^(k+1)(0) from
///   (-1)^(k+1) [..] = log^(k+1) x + sum_{n>=1} [L(n+x) - L(n) - x (L(n+1) - L(n))],
/// L = log^(k+1). Needs x > 0 and k <= 6.
SeriesValue zeta_deriv0_diff(int k, const Real& x, const std::optional<Real>& tol = {});

/// zeta(0), zeta'(0), zeta''(0) for n = 0, 1, 2.
SeriesValue zeta_deriv0_const(int n, const std::optional<Real>& tol = {});

/// zeta'(s) = -sum_{k>=2} log k / k^s for real s > 1.
SeriesValue zeta_prime_int(const Real& s, const std::optional<Real>& tol = {});

}  // namespace stieltjes

#endif  // STIELTJES_ZETA_HPP
