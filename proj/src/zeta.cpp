#include "stieltjes/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "stieltjes/errors.hpp"
#include "stieltjes/euler_maclaurin.hpp"
#include "stieltjes/stieltjes.hpp"
#include "stieltjes/summation.hpp"

namespace stieltjes {

namespace {

void require_positive_x(const Real& x, const char* who) {
  if (!(x > 0) || !x.is_finite()) {
    throw DomainError(std::string(who) + " needs x > 0, got x = " + to_string(x, 17));
  }
}

// Hasse's outer sum for zeta(s, X) with X large; nullopt if n_cap is too small.
std::optional<SeriesValue> hasse_outer(const Real& s, const Real& X, const Real& tol, int n_cap) {
  const double decay = X.to_double() + 2.0 - s.to_double();
  const int extra = static_cast<int>(0.302 * n_cap + X.to_double() * std::log10(n_cap + 1.0) +
                                     std::abs(1.0 - s.to_double()) * std::log10(X.to_double() + n_cap) +
                                     12);
  const int outer = working_digits();
  Real one_minus_s = Real(1) - s;
  Real s_minus_one = s - Real(1);

  PrecisionScope inner(outer + extra);
  std::vector<Real> powers;  // (X + k)^(1 - s)
  std::vector<Real> binom;   // row n of Pascal's triangle
  powers.reserve(n_cap + 1);
  binom.reserve(n_cap + 1);

  CompensatedSum total;
  int quiet = 0;
  Real last(0);
  for (int n = 0; n <= n_cap; ++n) {
    powers.push_back(pow(X + Real(n), one_minus_s));
    binom.emplace_back(1);
    for (int k = n - 1; k >= 1; --k) binom[k] += binom[k - 1];
    Real inner_sum(0);
    for (int k = 0; k <= n; ++k) {
      Real piece = binom[k] * powers[k];
      if (k % 2 == 0) {
        inner_sum += piece;
      } else {
        inner_sum -= piece;
      }
    }
    Real term = inner_sum / Real(n + 1) / s_minus_one;
    {
      PrecisionScope back(outer);
      total.add(rounded(term));
    }
    last = abs(term);
    quiet = last < tol / 10 ? quiet + 1 : 0;
    if (quiet >= 5) {
      PrecisionScope back(outer);
      Real err = rounded(last) * Real(n + 1) / Real(std::max(1.0, decay - 1.0));
      Real value = total.value();
      err += epsilon() * Real(n + 1) * (abs(value) + Real(1));
      return SeriesValue{std::move(value), std::move(err), n + 1, "hasse"};
    }
  }
  return std::nullopt;
}

}  // namespace

SeriesValue hurwitz_hasse(const Real& s, const Real& x, const std::optional<Real>& tol) {
  require_positive_x(x, "hurwitz_hasse");
  if (!(abs(s - Real(1)) > Real("1e-6"))) {
    throw PoleError("hurwitz_hasse: s = " + to_string(s, 17) + " is within 1e-6 of the pole at s = 1");
  }
  WorkingPrecision wp(tol);
  const Real& t = wp.tolerance();

  // zeta(s, x) = sum_{j<m} (x+j)^-s + zeta(s, x+m)
  const double target = 24.0 + std::max(0.0, s.to_double());
  const long m = std::max(0L, static_cast<long>(std::ceil(target - x.to_double())));
  CompensatedSum head;
  for (long j = 0; j < m; ++j) head.add(pow(x + Real(j), -s));
  Real X = x + Real(m);

  for (int n_cap = 64; n_cap <= 1024; n_cap *= 2) {
    if (auto outer = hasse_outer(s, X, t, n_cap)) {
      SeriesValue r = std::move(*outer);
      r.value = head.value() + r.value;
      r.abs_err += epsilon() * Real(m + 1) * abs(r.value);
      r.terms_used += m;
      return wp.finish(std::move(r));
    }
  }
  throw ConvergenceError("hurwitz_hasse: outer sum did not settle within 1024 terms");
}

SeriesValue hurwitz_em(const Real& s, const Real& x, const std::optional<Real>& tol) {
  require_positive_x(x, "hurwitz_em");
  if (s == 1) throw PoleError("hurwitz_em: s = 1 is the pole of the zeta function");
  WorkingPrecision wp(tol);
  const Real& t = wp.tolerance();

  const int J = std::clamp(static_cast<int>(std::ceil((1.0 - s.to_double()) / 2.0)) + 2, 8, 60);
  LogSummand F{{Real(1), x, LogPoly({LogTerm{Real(1), 0, 0}}, s)}};
  auto term = [&](long k) { return pow(Real(k) + x, -s); };
  auto tail = [&](long K) { return tail_sum(F, Real(K), J); };
  return wp.finish(sum_with_tail(term, 0, tail, t, "euler-maclaurin"));
}

SeriesValue zeta_deriv0_diff(int k, const Real& x, const std::optional<Real>& tol) {
  if (k < 0 || k > 6) throw UnsupportedError("zeta_deriv0_diff supports 0 <= k <= 6, got " + std::to_string(k));
  require_positive_x(x, "zeta_deriv0_diff");
  WorkingPrecision wp(tol);
  const Real& t = wp.tolerance();
  const int m = k + 1;

  if (x == 1) return wp.finish(SeriesValue{Real(0), Real(0), 1, "log-difference"});

  // F(n) = L(n+x) + (x-1) L(n) - x L(n+1)
  LogPoly L = LogPoly::monomial(m, 0);
  LogSummand F{{Real(1), x, L}, {x - Real(1), Real(0), L}, {-x, Real(1), L}};
  auto term = [&](long n) {
    Real a(n);
    return log_pow(a + x, m) + (x - Real(1)) * log_pow(a, m) - x * log_pow(a + Real(1), m);
  };
  auto tail = [&](long K) { return tail_sum(F, Real(K), kDefaultEmOrder); };
  SeriesValue r = sum_with_tail(term, 1, tail, t, "log-difference");
  r.value += log_pow(x, m);
  if (m % 2 == 1) r.value = -r.value;
  return wp.finish(std::move(r));
}

SeriesValue zeta_deriv0_const(int n, const std::optional<Real>& tol) {
  if (n < 0 || n > 2) {
    throw UnsupportedError("zeta_deriv0_const is available for n = 0, 1, 2 only, got " + std::to_string(n));
  }
  WorkingPrecision wp(tol);
  if (n == 0) return wp.finish(SeriesValue{Real(-1) / 2, Real(0), 1, "closed-form"});
  Real log2pi = log(Real(2) * pi());
  if (n == 1) return wp.finish(SeriesValue{-log2pi / 2, Real(0), 1, "closed-form"});

  // zeta''(0) = gamma_1 + gamma^2/2 - pi^2/24 - log^2(2 pi)/2
  const Real& t = wp.tolerance();
  SeriesValue g0 = gamma_n({0, Real(1), StieltjesMethod::series_b, t / 4});
  SeriesValue g1 = gamma_n({1, Real(1), StieltjesMethod::series_b, t / 4});
  Real p = pi();
  Real value = g1.value + g0.value * g0.value / 2 - p * p / 24 - log2pi * log2pi / 2;
  Real err = g1.abs_err + abs(g0.value) * g0.abs_err + g0.abs_err * g0.abs_err;
  return wp.finish(
      SeriesValue{std::move(value), std::move(err), g0.terms_used + g1.terms_used, "stieltjes-closed-form"});
}

SeriesValue zeta_prime_int(const Real& s, const std::optional<Real>& tol) {
  if (!(s > 1) || !s.is_finite()) {
    throw DomainError("zeta_prime_int needs real s > 1, got s = " + to_string(s, 17));
  }
  WorkingPrecision wp(tol);
  const Real& t = wp.tolerance();
  LogSummand F{{Real(1), Real(0), LogPoly({LogTerm{Real(-1), 1, 0}}, s)}};
  auto term = [&](long k) {
    Real a(k);
    return -log(a) * pow(a, -s);
  };
  auto tail = [&](long K) { return tail_sum(F, Real(K), 8); };
  return wp.finish(sum_with_tail(term, 2, tail, t, "euler-maclaurin"));
}

}  // namespace stieltjes
