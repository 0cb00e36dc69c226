#include "oracle_values.hpp"
#include "stieltjes/errors.hpp"
#include "stieltjes/stieltjes.hpp"
#include "stieltjes/zeta.hpp"
#include "test_support.hpp"

using namespace stieltjes;
using testing::R;

namespace {

Real mpfr_zeta_at(const Real& s) {
  Real z;
  mpfr_zeta(z.get(), s.get(), MPFR_RNDN);
  return z;
}

}  // namespace

TEST_SUITE("hurwitz") {
  TEST_CASE("Euler-Maclaurin route against MPFR zeta at x = 1") {
    for (const char* s : {"-3.5", "-1", "0", "0.5", "1.5", "2", "7.25"}) {
      SeriesValue v = hurwitz_em(R(s), Real(1));
      CHECK_MESSAGE(abs(v.value - mpfr_zeta_at(R(s))) <= v.abs_err + R("1e-30"), "s = " << s);
      CHECK(v.abs_err <= R("1e-17"));
    }
  }

  TEST_CASE("Euler-Maclaurin route against reference values") {
    struct Case {
      const char* s;
      const char* x;
      const char* expected;
    };
    for (const Case& c : {Case{"-2.5", "0.25", oracle::kHurwitz_m2_5_0_25}, Case{"-1", "1.7", oracle::kHurwitz_m1_1_7},
                          Case{"0.5", "0.5", oracle::kHurwitz_0_5_0_5}, Case{"2", "3", oracle::kHurwitz_2_3},
                          Case{"1.1", "1", oracle::kHurwitz_1_1_1}}) {
      SeriesValue v = hurwitz_em(R(c.s), R(c.x));
      CHECK_MESSAGE(abs(v.value - R(c.expected)) <= v.abs_err + R("1e-30"), "s=" << c.s << " x=" << c.x);
    }
  }

  TEST_CASE("closed-form values at s = 2 and s = 0") {
    CHECK_CLOSE(hurwitz_em(Real(2), R("0.5")).value, pi() * pi() / 2, R("1e-15"));
    CHECK_CLOSE(hurwitz_em(Real(0), R("0.25")).value, R("0.25"), R("1e-15"));
    CHECK_CLOSE(hurwitz_em(Real(0), Real(1)).value, R("-0.5"), R("1e-15"));
    // zeta(0, x) is linear with slope -1
    Real a = hurwitz_em(Real(0), R("0.3")).value;
    Real b = hurwitz_em(Real(0), R("2.3")).value;
    CHECK_CLOSE((b - a) / 2, Real(-1), R("1e-15"));
  }

  TEST_CASE("Hasse series") {
    CHECK_CLOSE(hurwitz_hasse(Real(0), Real(1)).value, R("-0.5"), R("1e-17"));
    CHECK_CLOSE(hurwitz_hasse(Real(-1), Real(1)).value, Real(-1) / 12, R("1e-17"));
    CHECK_CLOSE(hurwitz_hasse(Real(2), Real(1)).value, pi() * pi() / 6, R("1e-17"));
    CHECK_CLOSE(hurwitz_hasse(Real(0), R("0.25")).value, R("0.25"), R("1e-17"));
    SeriesValue h = hurwitz_hasse(R("1.5"), Real(1));
    SeriesValue e = hurwitz_em(R("1.5"), Real(1));
    CHECK(abs(h.value - e.value) <= h.abs_err + e.abs_err);
  }

  TEST_CASE("Hasse series honours a requested tolerance") {
    SeriesValue h = hurwitz_hasse(R("-2.5"), R("0.25"), R("1e-30"));
    CHECK(h.abs_err <= R("1e-30"));
    CHECK_CLOSE(h.value, R(oracle::kHurwitz_m2_5_0_25), R("1e-30"));
  }

  TEST_CASE("pole and domain errors") {
    CHECK_THROWS_AS(hurwitz_hasse(Real(1), Real(1)), PoleError);
    CHECK_THROWS_AS(hurwitz_hasse(Real(1) + R("1e-7"), Real(1)), PoleError);
    CHECK_THROWS_AS(hurwitz_hasse(Real(2), Real(0)), DomainError);
    CHECK_THROWS_AS(hurwitz_em(Real(1), Real(1)), PoleError);
    CHECK_THROWS_AS(hurwitz_em(Real(2), R("-1")), DomainError);
  }

  TEST_CASE("shift recurrence") {
    for (const char* s : {"-1.5", "0.5", "3"}) {
      const Real x("0.7");
      SeriesValue a = hurwitz_em(R(s), x + 1);
      SeriesValue b = hurwitz_em(R(s), x);
      CHECK(abs(a.value - b.value + pow(x, -R(s))) <= a.abs_err + b.abs_err + R("1e-30"));
    }
  }

  TEST_CASE("residue at the pole") {
    for (const char* x : {"0.25", "1", "1.7"}) {
      SeriesValue g0 = gamma_n({0, R(x)});
      for (int d = 2; d <= 6; ++d) {
        Real w = pow10(-d);
        Real r = w * hurwitz_em(1 + w, R(x)).value - 1;
        CHECK(abs(r) <= 5 * abs(g0.value) * w);
      }
    }
  }
}

TEST_SUITE("zeta derivatives at zero") {
  TEST_CASE("constants") {
    CHECK(zeta_deriv0_const(0).value == R("-0.5"));
    CHECK_CLOSE(zeta_deriv0_const(1).value, R(oracle::kZetaD0), R("1e-30"));
    CHECK_CLOSE(zeta_deriv0_const(1).value, -log(2 * pi()) / 2, R("1e-30"));
    SeriesValue z2 = zeta_deriv0_const(2);
    CHECK(abs(z2.value - R(oracle::kZetaDD0)) <= z2.abs_err + R("1e-30"));
    CHECK_THROWS_AS(zeta_deriv0_const(3), UnsupportedError);
  }

  TEST_CASE("Lerch: zeta'(0,x) - zeta'(0) = log Gamma(x)") {
    for (const char* x : {"0.3", "1", "2", "3", "4.5"}) {
      Real lg;
      mpfr_lngamma(lg.get(), R(x).get(), MPFR_RNDN);
      SeriesValue d = zeta_deriv0_diff(0, R(x));
      CHECK_MESSAGE(abs(d.value - lg) <= d.abs_err + R("1e-30"), "x = " << x);
    }
    CHECK(zeta_deriv0_diff(0, Real(1)).value == 0);
    CHECK_CLOSE(zeta_deriv0_diff(0, Real(3)).value, ln2(), R("1e-17"));
  }

  TEST_CASE("higher derivatives against reference values") {
    Real dd0 = R(oracle::kZetaDD0);
    SeriesValue a = zeta_deriv0_diff(1, R("0.25"));
    CHECK(abs(a.value - (R(oracle::kZetaDD0At0_25) - dd0)) <= a.abs_err + R("1e-30"));
    SeriesValue b = zeta_deriv0_diff(1, R("1.5"));
    CHECK(abs(b.value - (R(oracle::kZetaDD0At1_5) - dd0)) <= b.abs_err + R("1e-30"));
    SeriesValue c = zeta_deriv0_diff(2, R("0.5"));
    CHECK(abs(c.value - (R(oracle::kZetaDDD0At0_5) - R(oracle::kZetaDDD0))) <= c.abs_err + R("1e-30"));
  }

  TEST_CASE("value at x = 2 equals the value at x = 1") {
    for (int k = 0; k <= 4; ++k) {
      SeriesValue v = zeta_deriv0_diff(k, Real(2));
      CHECK_MESSAGE(abs(v.value) <= v.abs_err + R("1e-30"), "k = " << k);
    }
  }

  TEST_CASE("derivative shift") {
    for (int n = 1; n <= 3; ++n) {
      for (const char* x : {"0.5", "1.5", "2.718281828459045"}) {
        SeriesValue a = zeta_deriv0_diff(n - 1, R(x) + 1);
        SeriesValue b = zeta_deriv0_diff(n - 1, R(x));
        Real expected = (n % 2 == 1 ? 1 : -1) * log_pow(R(x), n);
        CHECK(abs(a.value - b.value - expected) <= a.abs_err + b.abs_err + R("1e-30"));
      }
    }
  }

  TEST_CASE("domain") {
    CHECK_THROWS_AS(zeta_deriv0_diff(0, Real(0)), DomainError);
    CHECK_THROWS_AS(zeta_deriv0_diff(7, Real(2)), UnsupportedError);
  }
}

TEST_SUITE("zeta prime") {
  TEST_CASE("reference values") {
    SeriesValue a = zeta_prime_int(Real(2));
    CHECK(abs(a.value - R(oracle::kZetaPrime2)) <= a.abs_err + R("1e-30"));
    CHECK_CLOSE(a.value, R("-0.937548254315"), R("1e-12"));
    SeriesValue b = zeta_prime_int(Real(3));
    CHECK(abs(b.value - R(oracle::kZetaPrime3)) <= b.abs_err + R("1e-30"));
    SeriesValue c = zeta_prime_int(Real(10));
    CHECK(c.value < 0);
    CHECK(abs(c.value) < 2 * ln2() / 1024);
    CHECK(abs(c.value - R(oracle::kZetaPrime10)) <= c.abs_err + R("1e-30"));
  }

  TEST_CASE("finite difference of zeta") {
    const Real h("1e-10");
    Real fd = (hurwitz_em(3 + h, Real(1), R("1e-32")).value - hurwitz_em(3 - h, Real(1), R("1e-32")).value) / (2 * h);
    CHECK_CLOSE(zeta_prime_int(Real(3)).value, fd, R("1e-8"));
  }

  TEST_CASE("domain") { CHECK_THROWS_AS(zeta_prime_int(Real(1)), DomainError); }
}
