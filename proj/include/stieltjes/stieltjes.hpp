#ifndef STIELTJES_STIELTJES_HPP
#define STIELTJES_STIELTJES_HPP

#include <optional>
#include <string>
#include <string_view>

#include "stieltjes/report.hpp"
#include "stieltjes/series_value.hpp"

namespace stieltjes {

inline constexpr int kMaxStieltjesOrder = 8;

enum class StieltjesMethod { limit, series_b, series_c, coffey };

std::string_view method_name(StieltjesMethod m);
StieltjesMethod parse_method(std::string_view name);  // accepts "series_b" and "series-b"

struct StieltjesQuery {
  int n = 0;
  Real x{1};
  StieltjesMethod method = StieltjesMethod::series_b;
  std::optional<Real> tol;
  long limit_terms = 1000;  // N for the raw limit
  long coffey_m = 0;        // split point of the Coffey series
};

/// gamma_n(x), the n-th coefficient of the Laurent expansion of zeta(s, x)
/// about s = 1:
///   limit     sum_{k=0}^{N} log^n(k+x)/(k+x) - log^(n+1)(N+x)/(n+1), no error claim
///   series_b  -log^(n+1)x/(n+1) + sum_k [h(k+x) - (L(k+1+x) - L(k+x))/(n+1)]
///   series_c  sum_k [h(k+x) - (L(k+2) - L(k+1))/(n+1)]
///   coffey    trapezoid corrections written with integer-order incomplete gammas
/// with h = log^n t / t and L = log^(n+1).
SeriesValue gamma_n(const StieltjesQuery& q);

/// gamma_n(1 + x) - gamma_n(x) + log^n(x)/x, which vanishes.
VerifyReport gamma_recurrence_check(int n, const Real& x, const std::optional<Real>& tol = {});

/// gamma_n(x) - gamma_n(y) = sum_k [h(k+x) - h(k+y)].
SeriesValue gamma_diff(int n, const Real& x, const Real& y, const std::optional<Real>& tol = {});

/// Gamma(n, t) = (n-1)! e^-t sum_{m<n} t^m/m!, n >= 1, t >= 0.
Real incgamma_int(int n, const Real& t);

/// Reduced proper fraction p/q.
class RationalArg {
 public:
  RationalArg(long p, long q);
  long p() const noexcept { return p_; }
  long q() const noexcept { return q_; }
  Real value() const;

 private:
  long p_;
  long q_;
};

/// gamma_1(p/q) in closed form through zeta''(0, j/q), log Gamma(j/q) and psi(p/q).
SeriesValue gamma1_rational(const RationalArg& r, const std::optional<Real>& tol = {});

/// gamma_1 = sum_{n>=1} (-1)^n [H_n zeta(n+1) + zeta'(n+1)]/(n+1), summed with
/// alternating-series acceleration.
SeriesValue gamma1_alt(const std::optional<Real>& tol = {});

/// integral_1^u gamma_n(x) dx = (-1)^(n+1)/(n+1) [zeta^(n+1)(0,u) - zeta^(n+1)(0)].
SeriesValue stieltjes_integral(int n, const Real& u, const std::optional<Real>& tol = {});

}  // namespace stieltjes

#endif  // STIELTJES_STIELTJES_HPP
