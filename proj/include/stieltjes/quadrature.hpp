#ifndef STIELTJES_QUADRATURE_HPP
#define STIELTJES_QUADRATURE_HPP

#include <functional>
#include <utility>
#include <vector>

#include "stieltjes/series_value.hpp"

namespace stieltjes {

/// Gauss-Legendre nodes and weights on [-1, 1] at the working precision.
/// Cached per (n, precision); the cache never changes a stored rule.
const std::vector<std::pair<Real, Real>>& gauss_legendre_rule(int n);

/// Composite Gauss-Legendre integral of f over [a, b].
///
/// With singular_left the panels are graded geometrically toward a (panel k
/// ends at a + (b-a) 2^-k) so that integrable endpoint singularities like
/// log(x - a) are resolved. abs_err is the difference from the same rule
/// on twice as many panels; the refined value is returned.
SeriesValue quad_gl(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
                    int panels, int nodes_per_panel, bool singular_left = false);

}  // namespace stieltjes

#endif  // STIELTJES_QUADRATURE_HPP
