#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <random>
#include <stdexcept>

#include "fide/asymptotics.hpp"
#include "fide/dynamics.hpp"
#include "oracles.hpp"

using namespace fide;

namespace {

SampledFunction sample(double t0, double T, double h,
                       const std::function<double(double)>& f) {
  const std::size_t n = static_cast<std::size_t>(std::round((T - t0) / h)) + 1;
  return SampledFunction::sample(t0, h, n, f);
}

}  // namespace

TEST_CASE("sap tail") {
  SUBCASE("exactly periodic sampling vanishes") {
    const double omega = 2.0;
    const auto f = sample(0.0, 40.0, 0.01,
                          [=](double t) { return std::sin(2.0 * M_PI * t / omega); });
    CHECK(sap_tail(f, omega) <= 1e-12);
  }
  SUBCASE("exponential decay") {
    const auto f = sample(0.0, 50.0, 0.01, [](double t) { return std::exp(-t); });
    CHECK(sap_tail(f, 1.0) <= 1e-10);
  }
  SUBCASE("t/(1+t) matches the closed form at the tail start") {
    const double T = 100.0, h = 0.01;
    const auto f = sample(0.0, T, h, [](double t) { return t / (1.0 + t); });
    const double got = sap_tail(f, 1.0);
    // difference 1/((1+t)(2+t)) is decreasing, sup sits at the window start
    const double t_star = std::ceil(0.9 * (T - 1.0) / h) * h;
    CHECK(got ==
          doctest::Approx(1.0 / ((1.0 + t_star) * (2.0 + t_star))).epsilon(1e-9));
    CHECK(got <= 2e-4);
  }
  SUBCASE("errors") {
    const auto f = sample(0.0, 10.0, 0.01, [](double t) { return t; });
    CHECK_THROWS_AS(sap_tail(f, 0.015), std::invalid_argument);  // off-grid
    CHECK_THROWS_AS(sap_tail(f, 9.5), std::invalid_argument);    // too long
  }
}

TEST_CASE("psap mean") {
  SUBCASE("periodic gives zero") {
    const auto f =
        sample(0.0, 30.0, 0.01, [](double t) { return std::cos(M_PI * t); });
    CHECK(psap_mean(f, 2.0, 25.0) <= 1e-12);
  }
  SUBCASE("exponential decay matches (1-e^{-1})(1-e^{-T})/T") {
    const double h = 0.01;
    const auto f = sample(0.0, 101.0, h, [](double t) { return std::exp(-t); });
    for (double T : {10.0, 100.0}) {
      const double expect = (1.0 - std::exp(-1.0)) * (1.0 - std::exp(-T)) / T;
      CHECK(psap_mean(f, 1.0, T) == doctest::Approx(expect).epsilon(1e-4));
      CHECK(std::fabs(psap_mean(f, 1.0, T) - expect) <= h * h);
    }
  }
  SUBCASE("sin(t) with omega=1 stays bounded away from zero") {
    const auto f = sample(0.0, 201.0, 0.01, [](double t) { return std::sin(t); });
    const double got = psap_mean(f, 1.0, 200.0);
    // fine-quadrature oracle value (mean of |2 sin(1/2) cos(t+1/2)|)
    CHECK(got == doctest::Approx(0.608811512182324).epsilon(1e-4));
    CHECK(got > 0.5);
  }
  SUBCASE("insufficient horizon") {
    const auto f = sample(0.0, 10.0, 0.01, [](double t) { return t; });
    CHECK_THROWS_AS(psap_mean(f, 1.0, 9.5), std::invalid_argument);
  }
}

TEST_CASE("class-r mean") {
  SUBCASE("periodic gives zero") {
    const auto f =
        sample(0.0, 30.0, 0.01, [](double t) { return std::sin(M_PI * t); });
    CHECK(class_r_mean(f, 2.0, 1.0, 25.0) <= 1e-12);
  }
  SUBCASE("exponential decay: window sup attained at the left edge") {
    const double h = 0.01;
    const auto f = sample(0.0, 60.0, h, [](double t) { return std::exp(-t); });
    const double T = 50.0;
    const double expect = (1.0 - std::exp(-1.0)) * std::exp(1.0) *
                          (std::exp(-1.0) - std::exp(-T)) / T;
    CHECK(class_r_mean(f, 1.0, 1.0, T) == doctest::Approx(expect).epsilon(1e-3));
  }
  SUBCASE("dominates the psap mean restricted to [r, T]") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    for (int rep = 0; rep < 5; ++rep) {
      const double a1 = amp(rng), a2 = amp(rng), a3 = amp(rng);
      const auto f = sample(0.0, 42.0, 0.01, [&](double t) {
        return a1 * std::sin(t) + a2 * std::sin(2.71 * t + 1.0) +
               a3 * t / (1.0 + t);
      });
      const double T = 40.0, r = 1.0, omega = 1.0;
      // restricted mean: (1/T) integral_r^T of the plain difference
      const double full = psap_mean(f, omega, T);
      const double head = psap_mean(f, omega, r) * r / T;
      const double restricted = full - head;
      CHECK(class_r_mean(f, omega, r, T) >= restricted - 1e-12);
    }
  }
  SUBCASE("mean grows with the window length") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    for (int rep = 0; rep < 5; ++rep) {
      const double a1 = amp(rng), a2 = amp(rng);
      const auto f = sample(0.0, 82.0, 0.02, [&](double t) {
        return a1 * std::sin(1.3 * t) + a2 * std::cos(0.37 * t) +
               std::exp(-0.2 * t);
      });
      for (double T : {20.0, 40.0, 80.0}) {
        CHECK(class_r_mean(f, 1.0, 0.5, T) <=
              class_r_mean(f, 1.0, 1.5, T) + 1e-12);
      }
    }
  }
}

TEST_CASE("ergodic set measure") {
  SUBCASE("periodic: empty set") {
    const auto f =
        sample(0.0, 30.0, 0.01, [](double t) { return std::sin(M_PI * t); });
    CHECK(ergodic_set_measure(f, 2.0, 1.0, 1e-6, 25.0) == 0.0);
  }
  SUBCASE("exponential decay: measure solves the level inequality") {
    const double h = 0.01, T = 100.0, eps = 0.1;
    const auto f = sample(0.0, 101.0, h, [](double t) { return std::exp(-t); });
    // window sup e^{-(t-1)}(1-e^{-1}) >= eps iff t <= 1 + ln((1-e^{-1})/eps)
    const double expect = std::log((1.0 - std::exp(-1.0)) / eps) / T;
    const double got = ergodic_set_measure(f, 1.0, 1.0, eps, T);
    CHECK(std::fabs(got - expect) <= 2.0 * h / T);
  }
  SUBCASE("sin with omega = pi exceeds eps almost everywhere") {
    // pick the step so that omega = pi sits exactly on the grid
    const double h = M_PI / 400.0;
    const auto f =
        SampledFunction::sample(0.0, h, 26001, [](double t) { return std::sin(t); });
    const double omega = 400.0 * h;       // = pi
    const double r = 100.0 * h;           // = pi/4
    const double T = 25600.0 * h;         // duration - omega
    const double got = ergodic_set_measure(f, omega, r, 0.01, T);
    CHECK(got >= 0.97);
    CHECK(got <= 1.0);
  }
}

TEST_CASE("stepanov norm") {
  SUBCASE("constants") {
    for (double p : {1.0, 2.0, 3.5}) {
      const auto f = sample(0.0, 5.0, 0.01, [](double) { return -2.5; });
      CHECK(stepanov_norm(f, p) == doctest::Approx(2.5).epsilon(1e-12));
    }
  }
  SUBCASE("sin(2 pi t) with p = 2 is sqrt(1/2) for every window") {
    const auto f =
        sample(0.0, 8.0, 0.001, [](double t) { return std::sin(2.0 * M_PI * t); });
    CHECK(stepanov_norm(f, 2.0) ==
          doctest::Approx(std::sqrt(0.5)).epsilon(1e-5));
  }
  SUBCASE("decaying exponential: sup window at the origin") {
    const auto f = sample(0.0, 6.0, 0.001, [](double t) { return std::exp(-t); });
    CHECK(stepanov_norm(f, 1.0) ==
          doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-6));
  }
  SUBCASE("preconditions") {
    const auto f = sample(0.0, 0.5, 0.01, [](double) { return 1.0; });
    CHECK_THROWS_AS(stepanov_norm(f, 1.0), std::invalid_argument);
    const auto g = sample(0.0, 5.0, 0.01, [](double) { return 1.0; });
    CHECK_THROWS_AS(stepanov_norm(g, 0.5), std::invalid_argument);
  }
}

TEST_CASE("classification verdicts") {
  SUBCASE("periodic: everything true") {
    const auto f = sample(0.0, 81.0, 0.01,
                          [](double t) { return std::sin(2.0 * M_PI * t); });
    const auto rep = classify(f, 1.0, 1.0, 1e-2);
    CHECK(rep.sap.verdict);
    CHECK(rep.psap.verdict);
    CHECK(rep.class_r.verdict);
    CHECK(rep.sap_tail <= 1e-12);
  }
  SUBCASE("sin(t) with omega = 1: everything false") {
    const auto f = sample(0.0, 81.0, 0.01, [](double t) { return std::sin(t); });
    const auto rep = classify(f, 1.0, 1.0, 1e-2);
    CHECK_FALSE(rep.sap.verdict);
    CHECK_FALSE(rep.psap.verdict);
    CHECK_FALSE(rep.class_r.verdict);
  }
  SUBCASE("periodic plus decay: SAP forces the weaker verdicts") {
    const auto f = sample(0.0, 81.0, 0.01, [](double t) {
      return std::sin(2.0 * M_PI * t) + std::exp(-t);
    });
    const auto rep = classify(f, 1.0, 1.0, 1e-2);
    CHECK(rep.sap.verdict);
    CHECK(rep.psap.verdict);
    CHECK(rep.class_r.verdict);
  }
  SUBCASE("embedding chain on a random corpus") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int rep = 0; rep < 8; ++rep) {
      const double a = uni(rng), b = uni(rng), c = uni(rng), w2 = 0.3 + 2.0 * uni(rng);
      const auto f = sample(0.0, 41.0, 0.01, [&](double t) {
        return a * std::sin(2.0 * M_PI * t) + b * std::sin(w2 * t) +
               c * std::exp(-0.3 * t);
      });
      const auto r = classify(f, 1.0, 0.5, 1e-2);
      CHECK((!r.sap.verdict || r.psap.verdict));
      CHECK((!r.sap.verdict || r.class_r.verdict));
      CHECK((!r.class_r.verdict || r.psap.verdict));
    }
  }
}

TEST_CASE("translation invariance with the (1 + s/T) relaxation") {
  const double h = 0.01;
  const auto f = sample(0.0, 101.0, h, [](double t) {
    return std::cos(2.0 * M_PI * t) + 2.0 * std::exp(-0.5 * t);
  });
  const auto base = classify(f, 1.0, 1.0, 1e-2);
  REQUIRE(base.class_r.verdict);

  const double s = 5.0;
  SampledFunction shifted;
  shifted.t0 = 0.0;
  shifted.step = h;
  shifted.dim = 1;
  const std::size_t cut = static_cast<std::size_t>(std::round(s / h));
  shifted.data.assign(f.data.begin() + cut, f.data.end());

  const double T = shifted.duration() - 1.0;
  ClassifyThresholds relaxed;
  relaxed.sap_abs *= (1.0 + s / T);
  relaxed.mean_abs *= (1.0 + s / T);
  const auto rep = classify(shifted, 1.0, 1.0, 1e-2, relaxed);
  CHECK(rep.class_r.verdict);
}

TEST_CASE("lipschitz composition preserves the class-r verdict") {
  // F(t, psi) = L * (mean of psi); composing with a decaying near-periodic
  // trajectory keeps the class-r property
  const auto grid = TimeGrid::make(1.0, 81.0, 0.01);
  Trajectory u(grid, 1);
  for (std::size_t i = 0; i < u.nodes(); ++i) {
    const double t = grid.node(i);
    u.at(i)[0] = std::sin(2.0 * M_PI * t) + std::exp(-0.2 * std::max(t, 0.0));
  }
  const auto base = classify(SampledFunction::from_trajectory(u), 1.0, 1.0, 1e-2);
  REQUIRE(base.class_r.verdict);

  const double L = 0.7;
  std::vector<double> composed(grid.positive_nodes());
  for (std::size_t j = 0; j < composed.size(); ++j) {
    const double t = static_cast<double>(j) * grid.step;
    const auto seg = segment_at(u, t);
    double mean = 0.0;
    for (std::size_t k = 0; k < seg.samples; ++k) mean += seg.sample(k)[0];
    composed[j] = L * mean / static_cast<double>(seg.samples);
  }
  const auto comp = SampledFunction::from_scalar(0.0, grid.step, std::move(composed));
  const auto rep = classify(comp, 1.0, 1.0, 1e-2);
  CHECK(rep.class_r.verdict);
}

TEST_CASE("convolution with the solution operator preserves class r") {
  const auto grid = TimeGrid::make(1.0, 81.0, 0.02);
  Trajectory u(grid, 1);
  for (std::size_t i = 0; i < u.nodes(); ++i) {
    const double t = grid.node(i);
    u.at(i)[0] = std::cos(2.0 * M_PI * t) + std::exp(-0.3 * std::max(t, 0.0));
  }
  REQUIRE(classify(SampledFunction::from_trajectory(u), 1.0, 1.0, 1e-2)
              .class_r.verdict);
  const auto spec = SectorialSpectrum::from_eigenvalues({-2.0});
  const auto kappa = convolve_solution_operator(spec, FractionalOrder(1.5), u);
  const auto rep = classify(SampledFunction::from_trajectory(kappa), 1.0, 1.0, 1e-2);
  CHECK(rep.class_r.verdict);
  // the mean curve actually decreases
  const auto& curve = rep.class_r_mean_curve;
  CHECK(curve.back().second <= 0.5 * curve.front().second);
}

TEST_CASE("report serialization carries the exact field names") {
  const auto f = sample(0.0, 41.0, 0.01,
                        [](double t) { return std::sin(2.0 * M_PI * t); });
  const auto rep = classify(f, 1.0, 1.0, 1e-2);
  const std::string text = report_to_json(rep);
  const auto j = nlohmann::json::parse(text);
  CHECK(j.contains("omega"));
  CHECK(j.contains("r"));
  CHECK(j.contains("eps"));
  CHECK(j.contains("sap_tail"));
  CHECK(j.contains("psap_mean_curve"));
  CHECK(j.contains("class_r_mean_curve"));
  CHECK(j.contains("ergodic_measure_curve"));
  CHECK(j.contains("verdicts"));
  CHECK(j["psap_mean_curve"].size() == 4);
  CHECK(j["psap_mean_curve"][0].size() == 2);
  CHECK(j["verdicts"]["sap"]["verdict"].is_boolean());
  CHECK(j["verdicts"]["class_r"]["threshold"].is_number());
}
