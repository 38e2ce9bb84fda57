#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hypdrum/explore.hpp"
#include "hypdrum/geometry.hpp"

using hypdrum::CriticalKind;
using hypdrum::Range;
using std::numbers::pi;

TEST_SUITE("scan") {
  TEST_CASE("grid shape, endpoints and argmax") {
    const auto s = hypdrum::scan(3, {0.1, 2.0}, {0.0, pi / 3}, 20, 20);
    CHECK(s.volumes.size() == 400);
    CHECK(s.d_values.size() == 20);
    CHECK(s.theta_values.size() == 20);
    CHECK(s.d_values.front() == 0.1);
    CHECK(s.d_values.back() == 2.0);
    CHECK(s.theta_values.front() == 0.0);
    CHECK(s.theta_values.back() == pi / 3);
    for (double v : s.volumes) {
      CHECK(std::isfinite(v));
      CHECK(v > 0.0);
      CHECK(v <= s.max_volume());
    }
    CHECK(s.at(3, 7) == hypdrum::drum_volume(3, s.d_values[3], s.theta_values[7]));
    CHECK(s.max_volume() <= hypdrum::maximize(3).vol_star + 1e-12);
  }

  TEST_CASE("fine scan around the n = 3 maximizer") {
    const auto s = hypdrum::scan(3, {1.31, 1.33}, {1.04, 1.05}, 5, 5);
    CHECK(std::abs(s.max_volume() - 3.66386) < 1e-3);
  }

  TEST_CASE("deterministic and independent of the worker count") {
    const auto a = hypdrum::scan(5, {0.05, 3.0}, {0.0, 2 * pi / 5}, 17, 13);
    const auto b = hypdrum::scan(5, {0.05, 3.0}, {0.0, 2 * pi / 5}, 17, 13);
    const auto c = hypdrum::scan(5, {0.05, 3.0}, {0.0, 2 * pi / 5}, 17, 13, 4);
    CHECK(a.volumes == b.volumes);
    CHECK(a.volumes == c.volumes);
    CHECK(a.argmax.i == c.argmax.i);
    CHECK(a.argmax.j == c.argmax.j);
  }

  TEST_CASE("invalid ranges") {
    CHECK_THROWS_AS(hypdrum::scan(2, {0.1, 1.0}, {0.0, 0.5}, 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(hypdrum::scan(3, {0.0, 1.0}, {0.0, 0.5}, 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(hypdrum::scan(3, {1.0, 0.5}, {0.0, 0.5}, 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(hypdrum::scan(3, {0.1, 1.0}, {-0.1, 0.5}, 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(hypdrum::scan(3, {0.1, 1.0}, {0.0, 2.2}, 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(hypdrum::scan(3, {0.1, 1.0}, {0.0, 0.5}, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(hypdrum::scan(3, {0.1, 1.0}, {0.0, 0.5}, 4, 1), std::invalid_argument);
  }
}

TEST_SUITE("maximize") {
  TEST_CASE("tabulated maximizers") {
    const auto m3 = hypdrum::maximize(3);
    CHECK(m3.converged);
    CHECK(std::abs(m3.theta_star - 1.0472) < 1e-4);
    CHECK(std::abs(m3.vol_star - 3.66386) < 1e-4);

    const auto m4 = hypdrum::maximize(4);
    CHECK(m4.converged);
    CHECK(std::abs(m4.vol_star - 6.17545) < 1e-3);
    CHECK(std::abs(m4.d_star - 1.12838) < 1e-3);
    CHECK(std::abs(m4.theta_star - 0.785398) < 1e-3);

    const auto m100 = hypdrum::maximize(100);
    CHECK(m100.converged);
    CHECK(std::abs(m100.vol_star - 202.903) < 1e-2);
    CHECK(std::abs(m100.d_star - 0.0543961) < 1e-4);
    CHECK(std::abs(m100.theta_star - 0.0314159) < 1e-4);
  }

  TEST_CASE("result invariants") {
    for (int n : {3, 5, 8, 13}) {
      const auto m = hypdrum::maximize(n);
      CAPTURE(n);
      CHECK(m.converged);
      CHECK(m.d_star > 0.0);
      CHECK(m.theta_star >= 0.0);
      CHECK(m.theta_star <= pi / n);
      CHECK(std::abs(m.vol_star - hypdrum::drum_volume(n, m.d_star, m.theta_star)) <= 1e-12);
      CHECK(m.halfclick_gap() < 1e-6);
      CHECK(m.tolerance == 1e-8);
      CHECK(m.iterations > 0);
    }
  }

  TEST_CASE("stable under a shifted coarse grid") {
    for (int n : {3, 6, 100}) {
      const auto a = hypdrum::maximize(n);
      hypdrum::MaximizeOptions shifted;
      shifted.grid_offset = 0.5;
      const auto b = hypdrum::maximize(n, shifted);
      CHECK(std::abs(a.vol_star - b.vol_star) <= 10 * a.tolerance);
    }
  }

  TEST_CASE("evaluation budget and bad options") {
    hypdrum::MaximizeOptions tiny;
    tiny.max_evaluations = 10;
    const auto m = hypdrum::maximize(4, tiny);
    CHECK_FALSE(m.converged);
    CHECK(m.vol_star > 0.0);

    hypdrum::MaximizeOptions bad;
    bad.param_tol = 0.0;
    CHECK_THROWS_AS(hypdrum::maximize(4, bad), std::invalid_argument);
    bad = {};
    bad.grid_offset = 1.0;
    CHECK_THROWS_AS(hypdrum::maximize(4, bad), std::invalid_argument);
    CHECK_THROWS_AS(hypdrum::maximize(2), std::invalid_argument);
  }

  TEST_CASE("volume per n") {
    CHECK(std::abs(hypdrum::per_n_ratio(100) - 2.02903) < 1e-3);
  }
}

TEST_SUITE("half-click curvature") {
  TEST_CASE("classification on either side of the n = 3 threshold") {
    CHECK(hypdrum::classify_halfclick(3, 0.2).kind == CriticalKind::LocalMin);
    CHECK(hypdrum::classify_halfclick(3, 0.5).kind == CriticalKind::LocalMax);
    const auto c = hypdrum::classify_halfclick(3, 0.5, 1e-3);
    CHECK(c.step == 1e-3);
    CHECK(c.n == 3);
    CHECK(c.d == 0.5);
    CHECK(hypdrum::to_string(c.kind) == "LOCAL_MAX");
  }

  TEST_CASE("close to the threshold the raw curvature is below tolerance") {
    const double d = hypdrum::critical_d(3);
    CHECK(hypdrum::classify_halfclick(3, d).kind == CriticalKind::Inconclusive);
  }

  TEST_CASE("exactly one sign change over d in [0.05, 1]") {
    int changes = 0;
    double previous = hypdrum::classify_halfclick(3, 0.05).second_difference;
    for (int k = 1; k <= 950; ++k) {
      const double d = 0.05 + 1e-3 * k;
      const double current = hypdrum::classify_halfclick(3, d).second_difference;
      if ((previous > 0.0) != (current > 0.0)) ++changes;
      previous = current;
    }
    CHECK(changes == 1);
  }

  TEST_CASE("steps h and h/2 agree in sign") {
    for (int n : {3, 4, 6}) {
      for (double d = 0.05; d < 3.0; d += 0.05) {
        const auto full = hypdrum::classify_halfclick(n, d, 2e-3);
        if (full.kind == CriticalKind::Inconclusive) continue;
        const auto half = hypdrum::classify_halfclick(n, d, 1e-3);
        CHECK((full.second_difference > 0.0) == (half.second_difference > 0.0));
      }
    }
  }

  TEST_CASE("invalid steps and inputs") {
    CHECK_THROWS_AS(hypdrum::classify_halfclick(3, 0.5, pi / 12), std::invalid_argument);
    CHECK_THROWS_AS(hypdrum::classify_halfclick(3, 0.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(hypdrum::classify_halfclick(3, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(hypdrum::classify_halfclick(2, 0.5), std::invalid_argument);
    CHECK(hypdrum::default_halfclick_step(3) == 1e-3);
    CHECK(hypdrum::default_halfclick_step(10000) < pi / (4 * 10000));
  }

  TEST_CASE("threshold location") {
    const double d3 = hypdrum::critical_d(3);
    CHECK(std::abs(d3 - 0.32) < 0.01);
    CHECK(hypdrum::classify_halfclick(3, d3 - 0.01).kind == CriticalKind::LocalMin);
    CHECK(hypdrum::classify_halfclick(3, d3 + 0.01).kind == CriticalKind::LocalMax);
    for (int n : {4, 5, 6}) {
      const double d = hypdrum::critical_d(n);
      CAPTURE(n);
      CHECK(d > 0.0);
      CHECK(hypdrum::classify_halfclick(n, d * 0.9).second_difference > 0.0);
      CHECK(hypdrum::classify_halfclick(n, d * 1.1).second_difference < 0.0);
    }
  }

  TEST_CASE("unimodal theta profile above the threshold") {
    double previous = hypdrum::drum_volume(3, 0.5, 0.0);
    for (int k = 1; k < 200; ++k) {
      const double v = hypdrum::drum_volume(3, 0.5, (pi / 3) * k / 199.0);
      CHECK(v >= previous - 1e-12);
      previous = v;
    }
  }
}
