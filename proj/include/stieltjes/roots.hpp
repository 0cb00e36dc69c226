#ifndef STIELTJES_ROOTS_HPP
#define STIELTJES_ROOTS_HPP

#include <functional>

#include "stieltjes/ext_real.hpp"

namespace stieltjes {

/// Bisection on [lo, hi] until the bracket is no wider than tol; returns
/// the midpoint of the final bracket. Throws BracketError when f(lo) and
/// f(hi) have the same sign.
Real find_root_bisect(const std::function<Real(const Real&)>& f, const Real& lo, const Real& hi,
                      const Real& tol);

}  // namespace stieltjes

#endif  // STIELTJES_ROOTS_HPP
