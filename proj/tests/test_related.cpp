#include <numeric>

#include "oracle_values.hpp"
#include "stieltjes/errors.hpp"
#include "stieltjes/power_series.hpp"
#include "stieltjes/related.hpp"
#include "stieltjes/von_mangoldt.hpp"
#include "stieltjes/zeta.hpp"
#include "test_support.hpp"

using namespace stieltjes;
using testing::R;

namespace {

// Lambda(k) by trial division
Real lambda_slow(long k) {
  for (long p = 2; p <= k; ++p) {
    if (k % p != 0) continue;
    long m = k;
    while (m % p == 0) m /= p;
    return m == 1 ? log(Real(p)) : Real(0);
  }
  return Real(0);
}

}  // namespace

TEST_SUITE("von mangoldt") {
  TEST_CASE("small values") {
    VonMangoldtTable t = von_mangoldt(100);
    CHECK(t(9) == log(Real(3)));
    CHECK(t(12) == 0);
    CHECK(t(1) == 0);
    CHECK(abs(t(2) + t(4) + t(8) - 3 * ln2()) <= 4 * epsilon());
    CHECK(t.prime_base(64) == 2);
    CHECK(t.prime_base(97) == 97);
  }

  TEST_CASE("matches trial division") {
    VonMangoldtTable t(2000);
    for (long k = 1; k <= 2000; ++k) CHECK_MESSAGE(t(k) == lambda_slow(k), "k = " << k);
  }

  TEST_CASE("Chebyshev psi is log lcm(1..N)") {
    VonMangoldtTable t(30);
    // lcm(1..30) = 2329089562800
    CHECK_CLOSE(t.chebyshev_psi(), log(Real(2329089562800L)), R("1e-30"));
  }

  TEST_CASE("bounds") {
    CHECK_THROWS_AS(von_mangoldt(1), DomainError);
    VonMangoldtTable t(50);
    CHECK_THROWS_AS(t(51), DomainError);
  }
}

TEST_SUITE("power series") {
  TEST_CASE("log of 1 + w") {
    PowerSeries p({Real(1), Real(1)}, 6);
    PowerSeries l = p.log();
    for (int j = 1; j <= 6; ++j) {
      Real expected = Real(j % 2 == 1 ? 1 : -1) / j;
      CHECK_CLOSE(l[j], expected, R("1e-32"));
    }
    CHECK(l[0] == 0);
  }

  TEST_CASE("product truncates at the order") {
    PowerSeries a({Real(1), Real(2), Real(3)}, 3);
    PowerSeries b({Real(1), Real(-1)}, 3);
    PowerSeries c = a * b;
    CHECK(c[0] == 1);
    CHECK(c[1] == 1);
    CHECK(c[2] == 1);
    CHECK(c[3] == -3);
  }

  TEST_CASE("exp and log are inverse on coefficients") {
    // exp(w) = sum w^j/j!
    std::vector<Real> e;
    Real f(1);
    for (int j = 0; j <= 8; ++j) {
      if (j > 0) f *= j;
      e.push_back(1 / f);
    }
    PowerSeries l = PowerSeries(e, 8).log();
    CHECK_CLOSE(l[1], Real(1), R("1e-32"));
    for (int j = 2; j <= 8; ++j) CHECK(abs(l[j]) <= R("1e-32"));
  }

  TEST_CASE("derivative") {
    PowerSeries a({Real(5), Real(1), Real(1), Real(1)}, 3);
    PowerSeries d = a.derivative();
    CHECK(d[0] == 1);
    CHECK(d[1] == 2);
    CHECK(d[2] == 3);
    CHECK(d[3] == 0);
  }

  TEST_CASE("log needs a unit constant term") {
    PowerSeries a({Real(2), Real(1)}, 2);
    CHECK_THROWS_AS(a.log(), DomainError);
  }
}

TEST_SUITE("eta") {
  TEST_CASE("from gamma against reference values") {
    const char* expected[] = {oracle::kEta0, oracle::kEta1, oracle::kEta2, oracle::kEta3};
    for (int n = 0; n <= 3; ++n) {
      SeriesValue v = eta(n, EtaRoute::from_gamma);
      CHECK_MESSAGE(abs(v.value - R(expected[n])) <= v.abs_err + R("1e-28"), "n = " << n);
    }
    CHECK_CLOSE(eta(0, EtaRoute::from_gamma).value, -testing::euler_gamma(), R("1e-12"));
    CHECK(eta(1, EtaRoute::from_gamma).value > 0);
  }

  TEST_CASE("series route carries no error claim and approaches the value") {
    SeriesValue s = eta(0, EtaRoute::series, 100'000);
    CHECK(s.abs_err.is_inf());
    CHECK_CLOSE(s.value, -testing::euler_gamma(), R("0.05"));
  }

  TEST_CASE("gap sums shrink by decade") {
    VonMangoldtTable t(1'000'000);
    Real two_gamma = 2 * testing::euler_gamma();
    Real g4 = abs(eta_gap(0, 10'000, &t) + two_gamma);
    Real g5 = abs(eta_gap(0, 100'000, &t) + two_gamma);
    Real g6 = abs(eta_gap(0, 1'000'000, &t) + two_gamma);
    CHECK(g5 < g4);
    CHECK(g6 < g5);
    CHECK(g6 < R("0.05"));
  }

  TEST_CASE("limits") {
    CHECK_THROWS_AS(eta(7, EtaRoute::from_gamma), UnsupportedError);
    CHECK_THROWS(eta(0, EtaRoute::series, kMaxEtaTerms + 1));
    CHECK(parse_eta_route("from-gamma") == EtaRoute::from_gamma);
  }
}

TEST_SUITE("delta") {
  TEST_CASE("closed forms") {
    CHECK_CLOSE(delta(0).value, R("0.5"), R("1e-8"));
    CHECK_CLOSE(delta(1).value, -1 + log(2 * pi()) / 2, R("1e-8"));
    CHECK_CLOSE(delta(2).value, R(oracle::kZetaDD0) + 2, R("1e-8"));
  }

  TEST_CASE("claimed error holds") {
    for (int n = 0; n <= 2; ++n) {
      SeriesValue d = delta(n, 500, 4);
      Real expected = n == 0 ? R("0.5") : n == 1 ? -1 + log(2 * pi()) / 2 : R(oracle::kZetaDD0) + 2;
      CHECK_MESSAGE(abs(d.value - expected) <= d.abs_err + R("1e-28"), "n = " << n);
    }
  }

  TEST_CASE("limits") {
    CHECK_THROWS_AS(delta(3), UnsupportedError);
    CHECK_THROWS_AS(delta(1, 5), DomainError);
  }
}

TEST_SUITE("digamma and log gamma") {
  TEST_CASE("digamma against MPFR") {
    for (const char* x : {"0.3", "0.5", "1", "2", "7.25", "40"}) {
      Real ref;
      mpfr_digamma(ref.get(), R(x).get(), MPFR_RNDN);
      SeriesValue v = digamma(R(x));
      CHECK_MESSAGE(abs(v.value - ref) <= v.abs_err + R("1e-30"), "x = " << x);
    }
    CHECK_CLOSE(digamma(R("0.3")).value, R(oracle::kPsiAt0_3), R("1e-17"));
    CHECK_CLOSE(digamma(R("7.25")).value, R(oracle::kPsiAt7_25), R("1e-17"));
  }

  TEST_CASE("digamma special values") {
    Real g = testing::euler_gamma();
    CHECK_CLOSE(digamma(Real(1)).value, -g, R("1e-17"));
    CHECK_CLOSE(digamma(Real(2)).value, 1 - g, R("1e-17"));
    CHECK_CLOSE(digamma(R("0.5")).value, -g - 2 * ln2(), R("1e-17"));
  }

  TEST_CASE("Gauss formula for rational arguments") {
    Real g = testing::euler_gamma();
    CHECK_CLOSE(digamma_rational(RationalArg(1, 2)).value, -g - 2 * ln2(), R("1e-17"));
    CHECK_CLOSE(digamma_rational(RationalArg(1, 4)).value, -g - 3 * ln2() - pi() / 2, R("1e-17"));
    for (long q = 2; q <= 8; ++q) {
      for (long p = 1; p < q; ++p) {
        if (std::gcd(p, q) != 1) continue;
        SeriesValue a = digamma_rational(RationalArg(p, q));
        SeriesValue b = digamma(Real(p) / Real(q));
        CHECK_MESSAGE(abs(a.value - b.value) <= a.abs_err + b.abs_err, p << "/" << q);
      }
    }
  }

  TEST_CASE("log gamma against MPFR") {
    for (const char* x : {"0.3", "0.5", "1", "1.3", "2", "2.3", "10.5"}) {
      Real ref;
      mpfr_lngamma(ref.get(), R(x).get(), MPFR_RNDN);
      SeriesValue v = log_gamma(R(x));
      CHECK_MESSAGE(abs(v.value - ref) <= v.abs_err + R("1e-30"), "x = " << x);
    }
    CHECK_CLOSE(log_gamma(R("0.5")).value, log(pi()) / 2, R("1e-17"));
    CHECK_CLOSE(exp(2 * log_gamma(R("0.5")).value), pi(), R("1e-16"));
    CHECK_CLOSE(log_gamma(R("0.3")).value, R(oracle::kLogGammaAt0_3), R("1e-17"));
  }

  TEST_CASE("log gamma recurrence") {
    for (const char* x : {"0.3", "1.3", "2.3"}) {
      SeriesValue a = log_gamma(R(x) + 1);
      SeriesValue b = log_gamma(R(x));
      CHECK(abs(a.value - b.value - log(R(x))) <= a.abs_err + b.abs_err + R("1e-30"));
    }
  }

  TEST_CASE("domain") {
    CHECK_THROWS_AS(digamma(Real(0)), DomainError);
    CHECK_THROWS_AS(log_gamma(R("-0.5")), DomainError);
  }
}

TEST_SUITE("dilcher") {
  TEST_CASE("order zero is log Gamma") {
    SeriesValue a = dilcher_log_gamma_k(0, R("1.5"));
    Real ref;
    mpfr_lngamma(ref.get(), R("2.5").get(), MPFR_RNDN);
    CHECK(abs(a.value - ref) <= a.abs_err + R("1e-30"));
  }

  TEST_CASE("Gamma_k(1) = Gamma_k(2) = 1") {
    for (int k = 0; k <= kMaxDilcherOrder; ++k) {
      CHECK(dilcher_log_gamma_k(k, Real(0)).value == 0);
      SeriesValue v = dilcher_log_gamma_k(k, Real(1));
      CHECK(abs(v.value) <= v.abs_err + R("1e-30"));
    }
  }

  TEST_CASE("against zeta derivative reference values") {
    struct Case {
      int k;
      const char* x;
      const char* expected;
    };
    const Case cases[] = {
        {1, "0.5", oracle::kLogGammaK1At0_5}, {1, "-0.5", oracle::kLogGammaK1Atm0_5}, {1, "2.5", oracle::kLogGammaK1At2_5},
        {2, "0.5", oracle::kLogGammaK2At0_5}, {2, "-0.5", oracle::kLogGammaK2Atm0_5}, {2, "2.5", oracle::kLogGammaK2At2_5},
        {3, "0.5", oracle::kLogGammaK3At0_5}, {3, "-0.5", oracle::kLogGammaK3Atm0_5}, {3, "2.5", oracle::kLogGammaK3At2_5},
        {4, "0.5", oracle::kLogGammaK4At0_5}, {4, "-0.5", oracle::kLogGammaK4Atm0_5}, {4, "2.5", oracle::kLogGammaK4At2_5},
    };
    for (const Case& c : cases) {
      SeriesValue v = dilcher_log_gamma_k(c.k, R(c.x));
      CHECK_MESSAGE(abs(v.value - R(c.expected)) <= v.abs_err + R("1e-28"), "k=" << c.k << " x=" << c.x << " "
                                                                              << testing::show(v.value, R(c.expected)));
    }
  }

  TEST_CASE("power series") {
    CHECK(dilcher_series61(Real(0)).value == 0);
    SeriesValue one = dilcher_series61(Real(1));
    CHECK_CLOSE(one.value, R(oracle::kStieltjesGrid[1][2]), one.abs_err + R("1e-28"));
    Real g1 = R(oracle::kStieltjesGrid[1][2]);
    for (const char* x : {"0.5", "-0.5", "0.9"}) {
      SeriesValue s = dilcher_series61(R(x));
      SeriesValue p = dilcher_log_gamma_k(1, R(x));
      CHECK_MESSAGE(abs(s.value - (p.value + g1 * R(x))) <= s.abs_err + p.abs_err + R("1e-28"), "x = " << x);
    }
    CHECK_THROWS_AS(dilcher_series61(R("1.5")), DomainError);
    CHECK_THROWS_AS(dilcher_series61(Real(-1)), DomainError);
  }

  TEST_CASE("power series at one half against its logarithmic form") {
    // 1/2 sum_{n>=1} [2 (1/2) log n / n + log^2 n - log^2(n + 1/2)]
    SeriesValue s = dilcher_series61(R("0.5"));
    Real dd = zeta_deriv0_diff(1, R("0.5"), R("1e-25")).value;
    Real g1 = R(oracle::kStieltjesGrid[1][2]);
    Real expected = (log_pow(R("0.5"), 2) - (dd - g1)) / 2;
    CHECK_CLOSE(s.value, expected, s.abs_err + R("1e-24"));
  }

  TEST_CASE("limits") {
    CHECK_THROWS_AS(dilcher_log_gamma_k(5, Real(1)), UnsupportedError);
    CHECK_THROWS_AS(dilcher_log_gamma_k(1, Real(-1)), DomainError);
  }
}
