#ifndef STIELTJES_TESTS_TEST_SUPPORT_HPP
#define STIELTJES_TESTS_TEST_SUPPORT_HPP

#include <string>

#include "doctest.h"
#include "stieltjes/ext_real.hpp"

namespace testing {

using stieltjes::Real;

inline Real R(const char* s) { return Real(std::string_view(s)); }

inline Real euler_gamma() {
  Real g;
  mpfr_const_euler(g.get(), MPFR_RNDN);
  return g;
}

inline std::string show(const Real& a, const Real& b) {
  return "got " + stieltjes::to_string(a, 25) + " expected " + stieltjes::to_string(b, 25) + " diff " +
         stieltjes::to_string(stieltjes::abs(a - b), 3);
}

}  // namespace testing

#define CHECK_CLOSE(a, b, tol)                                              \
  do {                                                                      \
    const ::stieltjes::Real va_ = (a);                                      \
    const ::stieltjes::Real vb_ = (b);                                      \
    CHECK_MESSAGE(::stieltjes::abs(va_ - vb_) <= (tol), ::testing::show(va_, vb_)); \
  } while (0)

#endif  // STIELTJES_TESTS_TEST_SUPPORT_HPP
