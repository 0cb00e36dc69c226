#include "stieltjes/related.hpp"

#include <cmath>
#include <string>

#include "stieltjes/alternating.hpp"
#include "stieltjes/bernoulli.hpp"
#include "stieltjes/errors.hpp"
#include "stieltjes/euler_maclaurin.hpp"
#include "stieltjes/power_series.hpp"
#include "stieltjes/summation.hpp"
#include "stieltjes/zeta.hpp"

namespace stieltjes {

namespace {

Real factorial(int n) {
  Real f(1);
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

SeriesValue stieltjes_at_one(int n, const Real& tol) {
  return gamma_n({n, Real(1), StieltjesMethod::series_b, tol});
}

// a_n = [H_n zeta(n+1) + zeta'(n+1)]/(n+1) with its error, n >= 1.
struct DilcherCoefficients {
  Real tol;
  Real H{0};
  int n = 0;

  std::pair<Real, Real> next() {
    ++n;
    H += Real(1) / Real(n);
    SeriesValue z = hurwitz_em(Real(n + 1), Real(1), tol);
    SeriesValue zp = zeta_prime_int(Real(n + 1), tol);
    Real a = (H * z.value + zp.value) / Real(n + 1);
    Real e = (H * z.abs_err + zp.abs_err) / Real(n + 1);
    return {std::move(a), std::move(e)};
  }
};

}  // namespace

EtaRoute parse_eta_route(std::string_view name) {
  std::string s(name);
  for (char& c : s) {
    if (c == '-') c = '_';
  }
  if (s == "series") return EtaRoute::series;
  if (s == "from_gamma") return EtaRoute::from_gamma;
  throw std::invalid_argument("unknown eta route '" + std::string(name) + "' (expected series or from-gamma)");
}

Real eta_gap(int n, std::int64_t K, const VonMangoldtTable* table) {
  if (n < 0 || n > 6) throw UnsupportedError("eta_gap supports 0 <= n <= 6");
  if (K < 2 || K > kMaxEtaTerms) throw UnsupportedError("eta_gap needs 2 <= K <= 1e8");
  std::optional<VonMangoldtTable> own;
  if (table == nullptr || table->limit() < K) {
    own.emplace(K);
    table = &*own;
  }
  WorkingPrecision wp(std::nullopt);
  CompensatedSum primes;
  for (const auto& [k, p] : table->prime_powers()) {
    if (k > K) break;
    Real kk(k);
    primes.add(log(Real(p)) * log_pow(kk, n) / kk);
  }
  // sum_{k<=K} h(k) = gamma_n + L(K)/(n+1) + h(K) - em_tail(h, K), h = log^n t/t
  SeriesValue g = stieltjes_at_one(n, wp.tolerance());
  Real kk(K);
  LogPoly h = LogPoly::monomial(n, 1);
  Real all = g.value + log_pow(kk, n + 1) / Real(n + 1) + h(kk) - em_tail(h, K, 8).value;
  Real out = primes.value() - all;
  PrecisionScope back(wp.outer_digits());
  return rounded(out);
}

SeriesValue eta(int n, EtaRoute route, std::int64_t K, const std::optional<Real>& tol) {
  if (n < 0 || n > 6) throw UnsupportedError("eta supports 0 <= n <= 6, got " + std::to_string(n));
  WorkingPrecision wp(tol);
  if (route == EtaRoute::series) {
    if (K < 2) throw DomainError("eta series route needs K >= 2");
    if (K > kMaxEtaTerms) throw UnsupportedError("eta series route budget is K <= 1e8");
    VonMangoldtTable table(K);
    CompensatedSum s;
    std::int64_t used = 0;
    for (const auto& [k, p] : table.prime_powers()) {
      Real kk(k);
      s.add(log(Real(p)) * log_pow(kk, n) / kk);
      ++used;
    }
    // the non-prime-power parts telescope to -L(K+1)/(n+1)
    Real value = s.value() - log_pow(Real(K + 1), n + 1) / Real(n + 1);
    value = value / factorial(n);
    if (n % 2 == 1) value = -value;
    return wp.finish(SeriesValue{std::move(value), infinity(), static_cast<std::int64_t>(K), "von-mangoldt-series"});
  }

  const int M = n + 2;
  const Real t = wp.tolerance() / Real(16);
  PowerSeries P(M);
  P[0] = Real(1);
  Real gerr(0);
  std::int64_t used = 0;
  for (int j = 0; j + 1 <= M; ++j) {
    SeriesValue g = stieltjes_at_one(j, t);
    Real c = g.value / factorial(j);
    if (j % 2 == 1) c = -c;
    P[j + 1] = c;
    gerr += g.abs_err / factorial(j);
    used += g.terms_used;
  }
  PowerSeries d = P.log().derivative();
  Real value = -d[n];
  Real scale(1);
  for (int j = 1; j <= M; ++j) scale = max(scale, abs(P[j]));
  Real err = gerr * Real(n + 1) * pow(Real(1) + scale, static_cast<long>(n + 1)) * Real(n + 2);
  return wp.finish(SeriesValue{std::move(value), std::move(err), used, "stieltjes-power-series"});
}

SeriesValue delta(int n, std::int64_t N, int J) {
  if (n < 0 || n > 2) throw UnsupportedError("delta supports n <= 2, got " + std::to_string(n));
  if (N < 10) throw DomainError("delta needs N >= 10");
  if (N > 100'000'000) throw UnsupportedError("delta needs N <= 1e8");
  if (J < 0 || J > 30) throw UnsupportedError("delta correction order J must be in 0..30");
  WorkingPrecision wp(std::nullopt);

  CompensatedSum s;
  for (std::int64_t k = 2; k <= N; ++k) s.add(log_pow(Real(k), n));
  if (n == 0) s.add(Real(1));
  Real u(N);
  Real lu = log(u);
  // int_1^u log^n = (-1)^n n! (-1 + u sum_{j<=n} (-1)^j log^j u / j!)
  Real inner(0);
  for (int j = 0; j <= n; ++j) {
    Real piece = pow(lu, static_cast<long>(j)) / factorial(j);
    inner += (j % 2 == 0) ? piece : -piece;
  }
  Real integral = factorial(n) * (u * inner - Real(1));
  if (n % 2 == 1) integral = -integral;
  Real bracket = s.value() - integral - log_pow(u, n) / 2;

  LogSummand F{{Real(1), Real(0), LogPoly::monomial(n, 0)}};
  SeriesValue corr = em_corrections(F, u, J);
  // em_corrections = f/2 - sum B f'; the bracket already removed f/2
  Real endpoint = corr.value - log_pow(u, n) / 2;
  Real value = bracket + endpoint;
  Real err = corr.abs_err + epsilon() * Real(N) * (Real(1) + abs(integral));
  return wp.finish(SeriesValue{std::move(value), std::move(err), static_cast<std::int64_t>(N), "euler-maclaurin"});
}

SeriesValue digamma(const Real& x, const std::optional<Real>& tol) {
  if (!(x > 0) || !x.is_finite()) throw DomainError("digamma needs x > 0, got x = " + to_string(x, 17));
  WorkingPrecision wp(tol);
  LogPoly inv = LogPoly::monomial(0, 1);
  LogPoly lg = LogPoly::monomial(1, 0);
  LogSummand F{{Real(1), x, inv}, {Real(-1), x + Real(1), lg}, {Real(1), x, lg}};
  auto term = [&](long k) {
    Real r = Real(1) / (Real(k) + x);
    return r - log1p(r);
  };
  auto tail = [&](long K) { return tail_sum(F, Real(K), kDefaultEmOrder); };
  SeriesValue s = sum_with_tail(term, 1, tail, wp.tolerance(), "log-series");
  s.value = log1p(x) - s.value - Real(1) / x;
  return wp.finish(std::move(s));
}

SeriesValue digamma_rational(const RationalArg& r, const std::optional<Real>& tol) {
  WorkingPrecision wp(tol);
  const long p = r.p();
  const long q = r.q();
  const Real t = wp.tolerance() / Real(4 * q);
  const Real P = pi();
  SeriesValue g = stieltjes_at_one(0, t);
  Real value = -g.value - log(Real(2) * P * Real(q)) - P / 2 * cot(P * Real(p) / Real(q));
  Real err = g.abs_err;
  std::int64_t used = g.terms_used;
  CompensatedSum s;
  for (long j = 1; j < q; ++j) {
    SeriesValue lg = log_gamma(Real(j) / Real(q), t);
    Real c = cos(Real(2) * P * Real(j * p % q) / Real(q));
    s.add(c * lg.value);
    err += Real(2) * abs(c) * lg.abs_err;
    used += lg.terms_used;
  }
  value -= Real(2) * s.value();
  err += epsilon() * Real(4 * q) * (Real(1) + abs(value));
  return wp.finish(SeriesValue{std::move(value), std::move(err), used, "gauss-rational"});
}

SeriesValue log_gamma(const Real& x, const std::optional<Real>& tol) {
  if (!(x > 0) || !x.is_finite()) throw DomainError("log_gamma needs x > 0, got x = " + to_string(x, 17));
  WorkingPrecision wp(tol);
  LogPoly lg = LogPoly::monomial(1, 0);
  LogSummand F{{x, Real(1), lg}, {Real(1) - x, Real(0), lg}, {Real(-1), x, lg}};
  auto term = [&](long k) {
    Real kk(k);
    return x * log1p(Real(1) / kk) - log1p(x / kk);
  };
  auto tail = [&](long K) { return tail_sum(F, Real(K), kDefaultEmOrder); };
  SeriesValue s = sum_with_tail(term, 1, tail, wp.tolerance(), "weierstrass-series");
  s.value -= log(x);
  return wp.finish(std::move(s));
}

SeriesValue dilcher_log_gamma_k(int k, const Real& x, const std::optional<Real>& tol) {
  if (k < 0 || k > kMaxDilcherOrder) {
    throw UnsupportedError("dilcher_log_gamma_k supports 0 <= k <= 4, got " + std::to_string(k));
  }
  if (!(x > -1) || !x.is_finite()) throw DomainError("dilcher_log_gamma_k needs x > -1, got x = " + to_string(x, 17));
  WorkingPrecision wp(tol);
  if (x.is_zero()) return wp.finish(SeriesValue{Real(0), Real(0), 1, "dilcher-series"});
  const Real& t = wp.tolerance();
  const int m = k + 1;
  LogPoly L = LogPoly::monomial(m, 0);
  LogSummand F{{x, Real(0), LogPoly::monomial(k, 1)}, {Real(-1) / Real(m), x, L}, {Real(1) / Real(m), Real(0), L}};
  auto term = [&](long j) {
    Real jj(j);
    return x * log_pow(jj, k) / jj - (log_pow(jj + x, m) - log_pow(jj, m)) / Real(m);
  };
  auto tail = [&](long K) { return tail_sum(F, Real(K), kDefaultEmOrder); };
  SeriesValue s = sum_with_tail(term, 1, tail, t / 2, "dilcher-series");
  SeriesValue g = stieltjes_at_one(k, t / (Real(4) * (Real(1) + abs(x))));
  s.value -= g.value * x;
  s.abs_err += g.abs_err * abs(x);
  s.terms_used += g.terms_used;
  return wp.finish(std::move(s));
}

SeriesValue dilcher_series61(const Real& x, const std::optional<Real>& tol) {
  if (!(x > -1) || !(x <= 1)) {
    throw DomainError("dilcher_series61 needs -1 < x <= 1, got x = " + to_string(x, 17));
  }
  WorkingPrecision wp(tol);
  if (x.is_zero()) return wp.finish(SeriesValue{Real(0), Real(0), 1, "dilcher-power-series"});
  const Real& t = wp.tolerance();

  if (x > 0) {
    const int digits = tolerance_digits(t);
    const int K = std::max(20, static_cast<int>(std::ceil((digits + 1) / 0.7657)) + 1);
    DilcherCoefficients coef{t / Real(4 * K)};
    std::vector<Real> b;
    Real coef_err(0);
    Real xp = x * x;  // x^(n+1) for n = 1
    for (int n = 1; n <= K; ++n) {
      auto [a, e] = coef.next();
      b.push_back(a * xp);
      coef_err += e * xp;
      xp *= x;
    }
    SeriesValue s = accelerate_alternating([&](long k) { return b[k]; }, K);
    s.value = -s.value;
    s.abs_err += coef_err;
    s.method = "dilcher-power-series";
    return wp.finish(std::move(s));
  }

  // x < 0: every term is -a_n |x|^(n+1); a_n decreases, so the rest is
  // bounded by a geometric series.
  const Real ax = abs(x);
  DilcherCoefficients coef{t / Real(1000)};
  CompensatedSum s;
  Real err(0);
  Real xp = ax * ax;
  for (int n = 1; n <= 200000; ++n) {
    auto [a, e] = coef.next();
    Real piece = a * xp;
    s.add(-piece);
    err += e * xp;
    Real rest = piece * ax / (Real(1) - ax);
    if (n >= 4 && rest < t / 4) {
      return wp.finish(SeriesValue{s.value(), err + rest, n, "dilcher-power-series"});
    }
    xp *= ax;
  }
  throw ConvergenceError("dilcher_series61: power series did not converge within 200000 terms");
}

}  // namespace stieltjes
