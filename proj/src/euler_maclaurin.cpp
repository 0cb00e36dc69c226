#include "stieltjes/euler_maclaurin.hpp"

#include "stieltjes/bernoulli.hpp"
#include "stieltjes/errors.hpp"
#include "stieltjes/summation.hpp"

namespace stieltjes {

namespace {

constexpr int kMaxInternalOrder = kMaxBernoulliIndex / 2 - 1;

// f', f''', f^(5), ..., f^(2J+1)
std::vector<LogPoly> odd_derivatives(const LogPoly& f, int J) {
  std::vector<LogPoly> out;
  out.reserve(J + 1);
  LogPoly d = logpoly_diff(f);
  for (int j = 0; j <= J; ++j) {
    out.push_back(d);
    d = logpoly_diff(logpoly_diff(d));
  }
  return out;
}

}  // namespace

Real evaluate(const LogSummand& F, const Real& t) {
  Real acc(0);
  for (const ShiftedLogPoly& c : F) acc += c.weight * c.f(t + c.shift);
  return acc;
}

SeriesValue em_corrections(const LogSummand& F, const Real& a, int J) {
  if (J < 0 || J > kMaxInternalOrder) {
    throw UnsupportedError("Euler-Maclaurin order " + std::to_string(J) + " is out of range");
  }
  Real value = evaluate(F, a) / 2;
  std::vector<Real> derivs(J + 1, Real(0));
  for (const ShiftedLogPoly& c : F) {
    std::vector<LogPoly> odd = odd_derivatives(c.f, J);
    Real at = a + c.shift;
    for (int j = 0; j <= J; ++j) derivs[j] += c.weight * odd[j](at);
  }
  for (int j = 1; j <= J; ++j) value -= bernoulli_over_factorial(j) * derivs[j - 1];
  // remainder <= 2 |B_(2J+2)/(2J+2)!| int |f^(2J+2)|, and f^(2J+1) is monotone on the tail
  Real err = Real(2) * abs(bernoulli_over_factorial(J + 1) * derivs[J]);
  return SeriesValue{std::move(value), std::move(err), J + 1, "euler-maclaurin"};
}

Real tail_integral(const LogSummand& F, const Real& a) {
  Real acc(0);
  for (const ShiftedLogPoly& c : F) acc -= c.weight * c.f.antiderivative(a + c.shift);
  return acc;
}

SeriesValue tail_sum(const LogSummand& F, const Real& a, int J) {
  SeriesValue corr = em_corrections(F, a, J);
  corr.value += tail_integral(F, a);
  return corr;
}

SeriesValue em_tail(const LogPoly& f, const Real& a, int J) {
  if (J < 0 || J > 8) throw UnsupportedError("em_tail order J must be in 0..8, got " + std::to_string(J));
  if (!f.empty() && f.min_decay() < 1) {
    throw DomainError("em_tail needs every term to decay at least like 1/t; the tail diverges");
  }
  if (f.empty()) return SeriesValue{Real(0), Real(0), 1, "em-tail"};
  SeriesValue out = em_corrections({ShiftedLogPoly{Real(1), Real(0), f}}, a, J);
  out.method = "em-tail";
  return out;
}

SeriesValue em_tail(const LogPoly& f, long N, int J) {
  if (N < 1) throw DomainError("em_tail start must be a positive integer");
  return em_tail(f, Real(N), J);
}

SeriesValue sum_with_tail(const TermFn& term, long first, const TailFn& tail, const Real& tol,
                          std::string method, long max_direct) {
  CompensatedSum partial;
  Real magnitude(0);
  long next = first;
  long count = 16;
  for (;;) {
    const long stop = first + count;
    for (; next < stop; ++next) {
      Real t = term(next);
      magnitude += abs(t);
      partial.add(t);
    }
    SeriesValue rest = tail(stop);
    if (rest.abs_err < tol / 4 || count >= max_direct) {
      if (!(rest.abs_err < tol / 4)) {
        throw ConvergenceError(method + ": tail error " + to_string(rest.abs_err, 3) +
                               " still above tolerance after " + std::to_string(count) + " terms");
      }
      Real sum = partial.value();
      Real rounding = epsilon() * Real(count + 1) * (Real(64) + magnitude + abs(sum));
      Real value = sum + rest.value;
      return SeriesValue{std::move(value), rest.abs_err + rounding, count, std::move(method)};
    }
    count *= 4;
  }
}

}  // namespace stieltjes
