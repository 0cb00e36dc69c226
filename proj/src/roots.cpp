#include "stieltjes/roots.hpp"

#include "stieltjes/errors.hpp"

namespace stieltjes {

Real find_root_bisect(const std::function<Real(const Real&)>& f, const Real& lo, const Real& hi,
                      const Real& tol) {
  if (!(tol > 0)) throw DomainError("find_root_bisect needs a positive tolerance");
  Real a = min(lo, hi);
  Real b = max(lo, hi);
  Real fa = f(a);
  Real fb = f(b);
  if (fa.is_zero()) return a;
  if (fb.is_zero()) return b;
  if (fa.sign() == fb.sign()) {
    throw BracketError("f has the same sign at both ends of [" + to_string(a, 17) + ", " +
                       to_string(b, 17) + "]");
  }
  while (b - a > tol) {
    Real m = (a + b) / 2;
    if (m <= a || m >= b) break;  // interval exhausted at this precision
    Real fm = f(m);
    if (fm.is_zero()) return m;
    if (fm.sign() == fa.sign()) {
      a = std::move(m);
      fa = std::move(fm);
    } else {
      b = std::move(m);
    }
  }
  return (a + b) / 2;
}

}  // namespace stieltjes
