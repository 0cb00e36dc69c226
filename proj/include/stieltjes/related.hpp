#ifndef STIELTJES_RELATED_HPP
#define STIELTJES_RELATED_HPP

#include <cstdint>
#include <optional>
#include <string_view>

#include "stieltjes/series_value.hpp"
#include "stieltjes/stieltjes.hpp"
#include "stieltjes/von_mangoldt.hpp"

namespace stieltjes {

// ---- eta constants: zeta'(s)/zeta(s) = -1/(s-1) - sum_n eta_n (s-1)^n ----

enum class EtaRoute { series, from_gamma };

EtaRoute parse_eta_route(std::string_view name);

inline constexpr std::int64_t kMaxEtaTerms = 100'000'000;

/// series: (-1)^n/n! sum_{k<=K} [Lambda(k) log^n k/k - (L(k+1) - L(k))/(n+1)],
///         reported with abs_err = +inf (the convergence rate is not effective).
/// from_gamma: -[w^n] d/dw log(1 + sum_j (-1)^j gamma_j w^(j+1)/j!).
SeriesValue eta(int n, EtaRoute route, std::int64_t K = 1'000'000, const std::optional<Real>& tol = {});

/// sum_{k<=K} (Lambda(k) - 1) log^n k / k, the quantity whose limit is
/// (-1)^n n! eta_n - gamma_n.
Real eta_gap(int n, std::int64_t K, const VonMangoldtTable* table = nullptr);

// ---- delta constants ----

/// (-1)^n [zeta^(n)(0) + n!] from
///   sum_{k<=N} log^n k - int_1^N log^n t dt - log^n(N)/2
/// minus the Euler-Maclaurin corrections at N. n <= 2, N >= 10.
SeriesValue delta(int n, std::int64_t N = 1000, int J = 4);

// ---- digamma and log-gamma ----

/// psi(x) = log(1+x) - sum_{k>=1} [1/(k+x) - log(1 + 1/(k+x))] - 1/x.
SeriesValue digamma(const Real& x, const std::optional<Real>& tol = {});

/// Gauss: psi(p/q) = -gamma - log(2 pi q) - (pi/2) cot(p pi/q)
///                   - 2 sum_{r=1}^{q-1} cos(2 pi r p/q) log Gamma(r/q).
SeriesValue digamma_rational(const RationalArg& r, const std::optional<Real>& tol = {});

/// log Gamma(x) = sum_{k>=1} [x log(1 + 1/k) - log(1 + x/k)] - log x.
SeriesValue log_gamma(const Real& x, const std::optional<Real>& tol = {});

// ---- Dilcher's generalised gamma functions ----

inline constexpr int kMaxDilcherOrder = 4;

/// log Gamma_k(x+1) = -gamma_k x + sum_{j>=1} [x log^k j / j - (L(j+x) - L(j))/(k+1)],
/// L = log^(k+1), x > -1.
SeriesValue dilcher_log_gamma_k(int k, const Real& x, const std::optional<Real>& tol = {});

/// log Gamma_1(x+1) + gamma_1 x = sum_{n>=1} (-1)^n [H_n zeta(n+1) + zeta'(n+1)] x^(n+1)/(n+1)
/// for -1 < x <= 1.
SeriesValue dilcher_series61(const Real& x, const std::optional<Real>& tol = {});

}  // namespace stieltjes

#endif  // STIELTJES_RELATED_HPP
