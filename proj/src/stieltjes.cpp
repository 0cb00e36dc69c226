#include "stieltjes/stieltjes.hpp"

#include <chrono>
#include <cmath>
#include <numeric>

#include "stieltjes/alternating.hpp"
#include "stieltjes/errors.hpp"
#include "stieltjes/euler_maclaurin.hpp"
#include "stieltjes/related.hpp"
#include "stieltjes/summation.hpp"
#include "stieltjes/zeta.hpp"

namespace stieltjes {

namespace {

void check_order(int n, int cap, const char* who) {
  if (n < 0 || n > cap) {
    throw UnsupportedError(std::string(who) + ": order n must be in 0.." + std::to_string(cap) + ", got " +
                           std::to_string(n));
  }
}

void check_x(const Real& x, const char* who) {
  if (!(x > 0) || !x.is_finite()) throw DomainError(std::string(who) + " needs x > 0, got x = " + to_string(x, 17));
}

// h(t) = log^n t / t
LogPoly h_poly(int n) { return LogPoly::monomial(n, 1); }
LogPoly L_poly(int n) { return LogPoly::monomial(n + 1, 0); }

Real h_at(int n, const Real& t) { return log_pow(t, n) / t; }

// Gamma(n, t) by its finite closed form; any real t.
Real incgamma_closed(int n, const Real& t) {
  CompensatedSum s;
  Real term(1);
  for (int m = 0; m < n; ++m) {
    if (m > 0) term = term * t / Real(m);
    s.add(term);
  }
  Real fact(1);
  for (int k = 2; k < n; ++k) fact *= k;
  return fact * exp(-t) * s.value();
}

SeriesValue limit_route(int n, const Real& x, long N) {
  if (N < 1) throw DomainError("limit method needs at least one term");
  CompensatedSum s;
  for (long k = 0; k <= N; ++k) s.add(h_at(n, Real(k) + x));
  Real value = s.value() - log_pow(Real(N) + x, n + 1) / Real(n + 1);
  return SeriesValue{std::move(value), infinity(), N + 1, "limit"};
}

SeriesValue series_b_route(int n, const Real& x, const Real& tol) {
  if (x < Real("1e-6")) {
    throw DomainError("series_b is not used for x < 1e-6 (cancellation against the k = 0 term); use series_c");
  }
  const int m = n + 1;
  LogSummand F{{Real(1), x, h_poly(n)},
               {Real(-1) / Real(m), x + Real(1), L_poly(n)},
               {Real(1) / Real(m), x, L_poly(n)}};
  auto term = [&](long k) {
    Real a = Real(k) + x;
    Real la = log(a);
    Real lb = log(a + Real(1));
    return pow(la, static_cast<long>(n)) / a - (pow(lb, static_cast<long>(m)) - pow(la, static_cast<long>(m))) / Real(m);
  };
  auto tail = [&](long K) { return tail_sum(F, Real(K), kDefaultEmOrder); };
  SeriesValue r = sum_with_tail(term, 0, tail, tol, "series_b");
  r.value -= log_pow(x, m) / Real(m);
  return r;
}

SeriesValue series_c_route(int n, const Real& x, const Real& tol) {
  const int m = n + 1;
  LogSummand F{{Real(1), x, h_poly(n)},
               {Real(-1) / Real(m), Real(2), L_poly(n)},
               {Real(1) / Real(m), Real(1), L_poly(n)}};
  auto term = [&](long k) {
    Real a = Real(k) + x;
    return h_at(n, a) - (log_pow(Real(k + 2), m) - log_pow(Real(k + 1), m)) / Real(m);
  };
  auto tail = [&](long K) { return tail_sum(F, Real(K), kDefaultEmOrder); };
  return sum_with_tail(term, 0, tail, tol, "series_c");
}

SeriesValue coffey_route(int n, const Real& x, long split, const Real& tol) {
  if (split < 0) throw DomainError("coffey split point m must be >= 0");
  const int m = n + 1;
  // T_j = (h(a) + h(a+1))/2 - (L(a+1) - L(a))/(n+1), a = j + x, written as
  //   log^n(a+1) - log^n a - (L(a+1) - L(a))/(n+1)
  //   - (a + 1/2) (n [G(n, log a) - G(n, log(a+1))] - [G(n+1, log a) - G(n+1, log(a+1))])
  auto term = [&](long j) {
    Real a = Real(j) + x;
    Real la = log(a);
    Real lb = log(a + Real(1));
    Real head = pow(lb, static_cast<long>(n)) - pow(la, static_cast<long>(n)) -
                (pow(lb, static_cast<long>(m)) - pow(la, static_cast<long>(m))) / Real(m);
    Real gn = incgamma_closed(n, la) - incgamma_closed(n, lb);
    Real gm = incgamma_closed(m, la) - incgamma_closed(m, lb);
    return head - (a + Real(1) / 2) * (Real(n) * gn - gm);
  };
  LogSummand F{{Real(1), x, h_poly(n)}};
  auto tail = [&](long K) {
    Real a(K);
    SeriesValue c = em_corrections(F, a, kDefaultEmOrder);
    c.value -= evaluate(F, a) / 2;
    return c;
  };
  SeriesValue r = sum_with_tail(term, split, tail, tol, "coffey");
  CompensatedSum head;
  for (long k = 0; k <= split; ++k) head.add(h_at(n, Real(k) + x));
  Real xm = Real(split) + x;
  r.value += head.value() - log_pow(xm, m) / Real(m) - h_at(n, xm) / 2;
  r.terms_used += split + 1;
  return r;
}

}  // namespace

std::string_view method_name(StieltjesMethod m) {
  switch (m) {
    case StieltjesMethod::limit: return "limit";
    case StieltjesMethod::series_b: return "series_b";
    case StieltjesMethod::series_c: return "series_c";
    case StieltjesMethod::coffey: return "coffey";
  }
  return "unknown";
}

StieltjesMethod parse_method(std::string_view name) {
  std::string s(name);
  for (char& c : s) {
    if (c == '-') c = '_';
  }
  if (s == "limit") return StieltjesMethod::limit;
  if (s == "series_b") return StieltjesMethod::series_b;
  if (s == "series_c") return StieltjesMethod::series_c;
  if (s == "coffey") return StieltjesMethod::coffey;
  throw std::invalid_argument("unknown method '" + std::string(name) +
                              "' (expected limit, series-b, series-c or coffey)");
}

SeriesValue gamma_n(const StieltjesQuery& q) {
  check_order(q.n, kMaxStieltjesOrder, "gamma_n");
  check_x(q.x, "gamma_n");
  WorkingPrecision wp(q.tol);
  const Real& t = wp.tolerance();
  switch (q.method) {
    case StieltjesMethod::limit:
      return wp.finish(limit_route(q.n, q.x, q.limit_terms));
    case StieltjesMethod::series_b:
      return wp.finish(series_b_route(q.n, q.x, t));
    case StieltjesMethod::series_c:
      return wp.finish(series_c_route(q.n, q.x, t));
    case StieltjesMethod::coffey:
      if (q.n == 0) {
        SeriesValue r = series_b_route(0, q.x, t);
        r.method = "series_b";
        return wp.finish(std::move(r));
      }
      return wp.finish(coffey_route(q.n, q.x, q.coffey_m, t));
  }
  throw std::invalid_argument("gamma_n: unknown method");
}

VerifyReport gamma_recurrence_check(int n, const Real& x, const std::optional<Real>& tol) {
  auto start = std::chrono::steady_clock::now();
  check_order(n, kMaxStieltjesOrder, "gamma_recurrence_check");
  check_x(x, "gamma_recurrence_check");
  WorkingPrecision wp(tol);
  const Real& t = wp.tolerance();
  SeriesValue shifted = gamma_n({n, x + Real(1), StieltjesMethod::series_b, t});
  SeriesValue base = gamma_n({n, x, StieltjesMethod::series_b, t});
  Real residual = shifted.value - base.value + h_at(n, x);
  Real tolerance = shifted.abs_err + base.abs_err + epsilon() * (Real(1) + abs(h_at(n, x)));
  PrecisionScope back(wp.outer_digits());
  VerifyReport r = make_report("gamma_recurrence", {{"n", std::to_string(n)}, {"x", input_value(x)}},
                               rounded(residual), rounded(tolerance),
                               "gamma_n(1+x) - gamma_n(x) + log^n(x)/x");
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

SeriesValue gamma_diff(int n, const Real& x, const Real& y, const std::optional<Real>& tol) {
  check_order(n, kMaxStieltjesOrder, "gamma_diff");
  check_x(x, "gamma_diff");
  check_x(y, "gamma_diff");
  WorkingPrecision wp(tol);
  if (x == y) return wp.finish(SeriesValue{Real(0), Real(0), 1, "difference"});
  const Real& t = wp.tolerance();
  LogSummand F{{Real(1), x, h_poly(n)}, {Real(-1), y, h_poly(n)}};
  auto term = [&](long k) { return h_at(n, Real(k) + x) - h_at(n, Real(k) + y); };
  auto tail = [&](long K) { return tail_sum(F, Real(K), kDefaultEmOrder); };
  return wp.finish(sum_with_tail(term, 0, tail, t, "difference"));
}

Real incgamma_int(int n, const Real& t) {
  if (n < 1) throw UnsupportedError("incgamma_int needs integer order n >= 1 (order 0 is the exponential integral)");
  if (!(t >= 0)) throw DomainError("incgamma_int needs t >= 0, got t = " + to_string(t, 17));
  return incgamma_closed(n, t);
}

RationalArg::RationalArg(long p, long q) : p_(p), q_(q) {
  if (q < 2 || p < 1 || p >= q) {
    throw DomainError("rational argument must satisfy 0 < p < q, got " + std::to_string(p) + "/" + std::to_string(q));
  }
  if (std::gcd(p, q) != 1) {
    throw DomainError("rational argument " + std::to_string(p) + "/" + std::to_string(q) + " is not reduced");
  }
}

Real RationalArg::value() const { return Real(p_) / Real(q_); }

SeriesValue gamma1_rational(const RationalArg& r, const std::optional<Real>& tol) {
  WorkingPrecision wp(tol);
  const long p = r.p();
  const long q = r.q();
  const Real t = wp.tolerance() / Real(4 * q + 8);

  SeriesValue g0 = gamma_n({0, Real(1), StieltjesMethod::series_b, t});
  SeriesValue g1 = gamma_n({1, Real(1), StieltjesMethod::series_b, t});
  SeriesValue z2 = zeta_deriv0_const(2, t);
  SeriesValue psi = digamma(r.value(), t);

  const Real P = pi();
  const Real lq = log(Real(q));
  const Real l2pi = log(Real(2) * P);
  const Real lead = g0.value + log(Real(2) * P * Real(q));

  Real value = g1.value + lead * (g0.value + psi.value) + lq * lq / 2 + lq * l2pi;
  Real err = g1.abs_err + abs(lead) * (g0.abs_err + psi.abs_err) + abs(g0.value + psi.value) * g0.abs_err;
  std::int64_t used = g0.terms_used + g1.terms_used + psi.terms_used;

  CompensatedSum trig;
  for (long j = 1; j < q; ++j) {
    Real angle = Real(2) * P * Real(j * p % q) / Real(q);
    Real c = cos(angle);
    Real s = sin(angle);
    Real u = Real(j) / Real(q);
    SeriesValue d2 = zeta_deriv0_diff(1, u, t);
    SeriesValue lg = log_gamma(u, t);
    trig.add(c * (z2.value + d2.value));
    trig.add(P * s * lg.value);
    err += abs(c) * (z2.abs_err + d2.abs_err) + P * abs(s) * lg.abs_err;
    used += d2.terms_used + lg.terms_used;
  }
  value += trig.value();
  err += epsilon() * Real(4 * q) * (Real(1) + abs(value));
  return wp.finish(SeriesValue{std::move(value), std::move(err), used, "rational-closed-form"});
}

SeriesValue gamma1_alt(const std::optional<Real>& tol) {
  WorkingPrecision wp(tol);
  const Real& t = wp.tolerance();
  const int digits = tolerance_digits(t);
  const int K = std::max(20, static_cast<int>(std::ceil((digits + 1) / 0.7657)) + 1);
  const Real inner = t / Real(4 * K);

  std::vector<Real> a(K + 1);
  Real inner_err(0);
  std::int64_t used = 0;
  Real H(0);
  for (int n = 1; n <= K; ++n) {
    H += Real(1) / Real(n);
    SeriesValue z = hurwitz_em(Real(n + 1), Real(1), inner);
    SeriesValue zp = zeta_prime_int(Real(n + 1), inner);
    a[n] = (H * z.value + zp.value) / Real(n + 1);
    if (!(a[n] > 0)) {
      throw ConvergenceError("gamma1_alt: coefficient a_" + std::to_string(n) + " = " + to_string(a[n], 10) +
                             " is not positive; zeta or zeta' is wrong");
    }
    inner_err += (H * z.abs_err + zp.abs_err) / Real(n + 1);
    used += z.terms_used + zp.terms_used;
  }
  // gamma_1 = -sum_{k>=0} (-1)^k a_{k+1}
  SeriesValue s = accelerate_alternating([&](long k) { return a[k + 1]; }, K);
  s.value = -s.value;
  s.abs_err += inner_err;
  s.terms_used = K + used;
  s.method = "alternating-cvz";
  return wp.finish(std::move(s));
}

SeriesValue stieltjes_integral(int n, const Real& u, const std::optional<Real>& tol) {
  check_order(n, 6, "stieltjes_integral");
  check_x(u, "stieltjes_integral");
  WorkingPrecision wp(tol);
  SeriesValue d = zeta_deriv0_diff(n, u, wp.tolerance());
  Real scale = Real(n % 2 == 1 ? 1 : -1) / Real(n + 1);
  d.value = d.value * scale;
  d.abs_err = d.abs_err * abs(scale);
  d.method = "zeta-derivative-difference";
  return wp.finish(std::move(d));
}

}  // namespace stieltjes
