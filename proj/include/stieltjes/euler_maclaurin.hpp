#ifndef STIELTJES_EULER_MACLAURIN_HPP
#define STIELTJES_EULER_MACLAURIN_HPP

#include <functional>
#include <string>
#include <vector>

#include "stieltjes/log_poly.hpp"
#include "stieltjes/series_value.hpp"

namespace stieltjes {

inline constexpr int kDefaultEmOrder = 4;

/// weight * f(t + shift)
struct ShiftedLogPoly {
  Real weight;
  Real shift;
  LogPoly f;
};

/// F(t) = sum_i w_i f_i(t + s_i): the continuous interpolant of a summand.
using LogSummand = std::vector<ShiftedLogPoly>;

Real evaluate(const LogSummand& F, const Real& t);

/// Endpoint part of Euler-Maclaurin at a:
///   F(a)/2 - sum_{j=1..J} B_2j/(2j)! F^(2j-1)(a)
/// abs_err is twice the size of the first omitted correction.
SeriesValue em_corrections(const LogSummand& F, const Real& a, int J);

/// Integral of F over [a, oo) through the closed-form antiderivatives; for
/// components that do not decay this is the analytically continued value.
Real tail_integral(const LogSummand& F, const Real& a);

/// sum_{k>=0} F(a + k) = tail_integral + em_corrections.
SeriesValue tail_sum(const LogSummand& F, const Real& a, int J);

/// sum_{k>=N} f(k) - integral_N^oo f for a LogPoly whose terms all decay at
/// least like 1/t. The constant-free remainder of the telescoped series.
SeriesValue em_tail(const LogPoly& f, long N, int J = kDefaultEmOrder);

/// Same with a real starting point: sum_{k>=0} f(a+k) - integral_a^oo f.
SeriesValue em_tail(const LogPoly& f, const Real& a, int J = kDefaultEmOrder);

using TermFn = std::function<Real(long)>;
using TailFn = std::function<SeriesValue(long)>;

/// sum_{k>=first} term(k). Terms are added directly, in ascending order and
/// compensated, up to K; tail(K) supplies sum_{k>=K}. K starts at first+16
/// and grows by 4x until the tail's claimed error is below tol/4.
SeriesValue sum_with_tail(const TermFn& term, long first, const TailFn& tail, const Real& tol,
                          std::string method, long max_direct = 1L << 24);

}  // namespace stieltjes

#endif  // STIELTJES_EULER_MACLAURIN_HPP
