#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fide/gamma.hpp"
#include "fide/mlf.hpp"
#include "oracles.hpp"

using fide::MlfParams;
using fide::mlf_eval;

TEST_CASE("exponential identity at alpha = 1") {
  const MlfParams p{1.0, 1.0};
  for (int i = 0; i <= 200; ++i) {
    const double z = -100.0 * i / 200.0;
    CHECK(std::fabs(mlf_eval(p, z) - std::exp(z)) <= 1e-10);
  }
}

TEST_CASE("cosine identity at alpha = 2") {
  const MlfParams p{2.0, 1.0};
  for (int i = 0; i <= 200; ++i) {
    const double x = 7.0 * i / 200.0;
    CHECK(std::fabs(mlf_eval(p, -x * x) - std::cos(x)) <= 1e-10);
  }
  // beyond the series window the saddle term alone carries the identity
  for (double x : {9.0, 15.0, 40.0, 200.0}) {
    CHECK(std::fabs(mlf_eval(p, -x * x) - std::cos(x)) <= 1e-10);
  }
}

TEST_CASE("E_{alpha,1}(0) = 1 exactly") {
  for (double a : {1.0, 1.1, 1.5, 1.9, 2.0}) {
    CHECK(mlf_eval({a, 1.0}, 0.0) == 1.0);
  }
}

TEST_CASE("frozen oracle values (series regime)") {
  // extended-precision series oracle values, |error| < 1e-19
  CHECK(mlf_eval({1.5, 1.0}, -2.0) ==
        doctest::Approx(0.029430685602826472).epsilon(1e-11));
  CHECK(mlf_eval({1.5, 1.0}, -0.5) ==
        doctest::Approx(0.66323679487242796).epsilon(1e-12));
  CHECK(mlf_eval({1.5, 1.0}, -5.0) ==
        doctest::Approx(-0.30008205041313088).epsilon(1e-11));
  CHECK(mlf_eval({1.5, 1.0}, -1.0) ==
        doctest::Approx(0.39662936531808808).epsilon(1e-12));
  CHECK(mlf_eval({1.5, 1.0}, -4.0) ==
        doctest::Approx(-0.27242487890994054).epsilon(1e-11));
}

TEST_CASE("frozen value in the deep asymptotic regime, quadrature cross-check") {
  const MlfParams p{1.5, 1.0};
  const double v = mlf_eval(p, -1e4);
  CHECK(v == doctest::Approx(-2.8209475474899629e-5).epsilon(1e-9));
  // the global quadrature representation must agree with the expansion
  CHECK(std::fabs(fide::mlf_asymptotic(p, -1e4) - fide::mlf_integral(p, -1e4)) <=
        1e-14);
  CHECK(std::fabs(mlf_eval(p, -500.0) - (-5.6415998262057874e-4)) <= 1e-12);
}

TEST_CASE("production evaluator vs MPFR series oracle across regimes") {
  for (double a : {1.05, 1.1, 1.2, 1.31, 1.5, 1.7, 1.8, 1.9, 1.95, 1.99}) {
    const double xmax = std::min(2.0 * fide::mlf_asymptotic_limit(a), 6000.0);
    double worst = 0.0;
    for (double x = 1e-3; x < xmax; x *= 1.6) {
      const double ref = oracle::mlf_series_reference(a, 1.0, -x);
      worst = std::max(worst, std::fabs(mlf_eval({a, 1.0}, -x) - ref));
    }
    CAPTURE(a);
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("deep-domain spot checks against the oracle") {
  // the series oracle is affordable out to |z| = 1e6 only for alpha near 2
  for (double x : {1e5, 1e6}) {
    const double ref = oracle::mlf_series_reference(1.95, 1.0, -x);
    CHECK(std::fabs(mlf_eval({1.95, 1.0}, -x) - ref) <= 1e-10);
  }
}

TEST_CASE("general beta against the oracle") {
  for (double b : {0.5, 1.0, 1.4}) {
    for (double x : {0.3, 3.0, 17.0, 90.0}) {
      const double ref = oracle::mlf_series_reference(1.6, b, -x);
      CAPTURE(b);
      CAPTURE(x);
      CHECK(std::fabs(mlf_eval({1.6, b}, -x) - ref) <= 1e-10);
    }
  }
}

TEST_CASE("series and large-argument evaluators agree on the overlap window") {
  // spec window: |z| in [5, 50] at alpha = 1.5
  const MlfParams p{1.5, 1.0};
  for (double x = 5.0; x <= 50.0; x += 2.5) {
    CHECK(std::fabs(fide::mlf_series(p, -x) - fide::mlf_integral(p, -x)) <=
          1e-8);
  }
  // integral and algebraic-asymptotic routes agree past the switch point
  for (double x = fide::mlf_asymptotic_limit(1.5); x < 900.0; x *= 1.3) {
    CHECK(std::fabs(fide::mlf_integral(p, -x) - fide::mlf_asymptotic(p, -x)) <=
          1e-11);
  }
}

TEST_CASE("adjacent regimes agree at the switch points") {
  for (double a : {1.05, 1.2, 1.5, 1.8, 1.95}) {
    const MlfParams p{a, 1.0};
    CAPTURE(a);
    const double e1 = fide::mlf_series_limit(a);
    CHECK(std::fabs(fide::mlf_series(p, -e1) - fide::mlf_integral(p, -e1)) <=
          2e-10);
    const double e2 = fide::mlf_asymptotic_limit(a);
    CHECK(std::fabs(fide::mlf_integral(p, -e2) -
                    fide::mlf_asymptotic(p, -e2)) <= 2e-10);
  }
}

TEST_CASE("boundedness and algebraic tail decay") {
  for (double a : {1.2, 1.5, 1.8}) {
    const MlfParams p{a, 1.0};
    double prev = 1e300;
    for (double x : {1e4, 1e5, 1e6}) {
      const double v = mlf_eval(p, -x);
      CHECK(v <= 1.0 + 1e-12);
      CHECK(v >= -1.0);
      // E(z) ~ -1/(z Gamma(1-a)):  z E(z) + 1/Gamma(1-a) -> 0
      const double resid = std::fabs(-x * v + fide::reciprocal_gamma(1.0 - a));
      CHECK(resid < prev + 1e-18);
      prev = resid;
    }
    CHECK(prev <= 1e-5);
  }
  // values stay in (-c0, 1] on a dense scan
  for (double a : {1.2, 1.5, 1.8}) {
    for (double x = 0.0; x < 300.0; x += 0.37) {
      const double v = mlf_eval({a, 1.0}, -x);
      CHECK(v <= 1.0 + 1e-12);
      CHECK(v > -1.0);
    }
  }
}

TEST_CASE("argument and parameter validation") {
  CHECK_THROWS_AS(mlf_eval({1.5, 1.0}, 0.5), std::domain_error);
  CHECK_THROWS_AS(mlf_eval({1.5, 1.0}, std::nan("")), std::domain_error);
  CHECK_THROWS_AS(mlf_eval({0.0, 1.0}, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(mlf_eval({2.5, 1.0}, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(mlf_eval({1.5, 0.0}, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(mlf_eval({1.5, -2.0}, -1.0), std::invalid_argument);
}

TEST_CASE("batch evaluation") {
  const MlfParams p15{1.5, 1.0};
  SUBCASE("zeros map to ones") {
    const std::vector<double> zs{0.0, 0.0, 0.0};
    const auto out = fide::mlf_eval_batch(p15, zs);
    for (double v : out) CHECK(v == 1.0);
  }
  SUBCASE("alpha = 1 exponentials") {
    const std::vector<double> zs{-1.0, -2.0};
    const auto out = fide::mlf_eval_batch({1.0, 1.0}, zs);
    CHECK(out[0] == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(out[1] == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
  }
  SUBCASE("matches scalar evaluation and frozen oracle values") {
    const std::vector<double> zs{-0.5, -5.0, -500.0};
    const auto out = fide::mlf_eval_batch(p15, zs);
    const std::vector<double> expected{0.66323679487242796,
                                       -0.30008205041313088,
                                       -5.6415998262057874e-4};
    for (std::size_t i = 0; i < zs.size(); ++i) {
      CHECK(out[i] == mlf_eval(p15, zs[i]));
      CHECK(out[i] == doctest::Approx(expected[i]).epsilon(1e-10));
    }
  }
  SUBCASE("offending index is reported") {
    const std::vector<double> zs{-1.0, 2.0, -3.0};
    try {
      fide::mlf_eval_batch(p15, zs);
      FAIL("expected domain_error");
    } catch (const std::domain_error& e) {
      CHECK(std::string(e.what()).find("entry 1") != std::string::npos);
    }
  }
}
