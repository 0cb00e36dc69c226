#ifndef STIELTJES_VERIFIER_HPP
#define STIELTJES_VERIFIER_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stieltjes/report.hpp"

namespace stieltjes {

/// log^(n+1)(N+x) against the telescoped form
///   log^(n+1)(1+x) - (n+1) int_N^(N+1) log^n(t+x)/(t+x) dt + sum_{k=1}^{N} [L(k+1+x) - L(k+x)],
/// evaluated at the working precision. The identity is exact, so the
/// residual is pure rounding: tolerance 1e-28 at 34 digits.
VerifyReport check_lemma31(int n, const Real& x, long N);

/// pi cot(pi x) against psi(1-x) - psi(x) and against the partial fractions
/// 1/x + sum_n 2x/(x^2 - n^2). Residual is the larger of the two gaps.
VerifyReport check_cotangent(const Real& x);

/// Three reports: int_1^2 gamma_n, int_0^1 zeta'(0,x) dx, int_0^1 zeta''(0,x) dx,
/// each of which vanishes.
std::vector<VerifyReport> check_vanishing_integrals(int n);

/// Sign changes of gamma_n on a 257-point grid over [1,2]; for n = 0 the
/// single root is located and compared with 1.461632144968.
VerifyReport check_zero_structure(int n);

/// g_1 from the zeta'' difference against its direct series, and the same
/// for g_2 with zeta'''. Two reports.
std::vector<VerifyReport> check_g_functions(const Real& x);

struct SuitePolicy {
  unsigned threads = 0;  // 0: one per hardware thread
};

/// Identifiers accepted by run_suite, sorted.
std::vector<std::string> check_ids();

/// Runs the selected checks over their default grids. The result is sorted
/// by (check_id, inputs) whatever order the checks finished in. Throws
/// std::invalid_argument for an unknown id.
std::vector<VerifyReport> run_suite(const std::set<std::string>& selection, const SuitePolicy& policy = {});

}  // namespace stieltjes

#endif  // STIELTJES_VERIFIER_HPP
