#include <doctest.h>

#include <cmath>

#include <json.hpp>

#include "wright/sweep.hpp"

using namespace wright;

TEST_SUITE_BEGIN("sweep");

TEST_CASE("bisection locates criterion boundaries") {
  // starlike half-disk criterion boundary in b at a = mu = nu = 1 sits at 2
  auto kt4_verdict = [](double b) {
    return starlike_half_series_bound({1, 1, 1, b}).established();
  };
  CHECK(boundary_bisect(kt4_verdict, 1.0, 3.0) == doctest::Approx(2.0).epsilon(1e-6));

  auto thr_verdict = [](double b) { return starlike_disk_threshold({1, 1, 1, b}).established(); };
  CHECK(boundary_bisect(thr_verdict, 1.0, 4.0) == doctest::Approx(2.5).epsilon(1e-7));

  auto cvx_verdict = [](double b) {
    return convex_half_and_starlike_thresholds({1, 1, 1, b})[0].established();
  };
  CHECK(boundary_bisect(cvx_verdict, 1.0, 4.0) ==
        doctest::Approx(1.0 + std::sqrt(3.0)).epsilon(1e-7));

  CHECK_THROWS_AS(boundary_bisect([](double) { return true; }, 0.0, 1.0), std::domain_error);
}

TEST_CASE("two-parameter nu sweeps reproduce the published intervals") {
  SweepSpec spec;
  spec.family = SweepFamily::TwoParam;
  spec.varying = "nu";
  spec.lo = 0.5;
  spec.hi = 1.2;
  spec.steps = 71;
  spec.fixed = {{"b", 4.0}};
  spec.criterion_ids = {"convex-half/series-bound"};
  const SweepResult res = run_sweep(spec);
  REQUIRE(res.boundaries.size() == 2);
  CHECK(std::abs(res.boundaries[0].location - 0.76) < 0.01);
  CHECK(res.boundaries[0].rising);
  CHECK(std::abs(res.boundaries[1].location - 0.95) < 0.01);
  CHECK_FALSE(res.boundaries[1].rising);

  spec.fixed = {{"b", 2.0}};
  spec.criterion_ids = {"starlike-half/series-bound"};
  const SweepResult res2 = run_sweep(spec);
  REQUIRE(res2.boundaries.size() == 2);
  CHECK(std::abs(res2.boundaries[0].location - 0.645) < 0.01);
  CHECK(std::abs(res2.boundaries[1].location - 0.999) < 0.01);
}

TEST_CASE("bessel sweep boundary sits at 3/2") {
  SweepSpec spec;
  spec.family = SweepFamily::Bessel;
  spec.varying = "beta";
  spec.lo = 1.0;
  spec.hi = 2.0;
  spec.steps = 11;
  spec.criterion_ids = {"starlike-disk/threshold"};
  const SweepResult res = run_sweep(spec);
  REQUIRE(res.boundaries.size() == 1);
  CHECK(res.boundaries[0].location == doctest::Approx(1.5).epsilon(1e-6));
  // established from the boundary upward
  int established = 0;
  for (const auto& row : res.rows)
    for (const auto& [id, est] : row.verdicts)
      if (est) ++established;
  CHECK(established == 6);  // beta in {1.5, ..., 2.0}
}

TEST_CASE("table and json rendering") {
  SweepSpec spec;
  spec.family = SweepFamily::Bessel;
  spec.varying = "beta";
  spec.lo = 1.2;
  spec.hi = 1.8;
  spec.steps = 7;
  spec.criterion_ids = {"starlike-disk/threshold"};
  const SweepResult res = run_sweep(spec);

  const std::string table = render_table(res);
  CHECK(table.find("starlike-disk/threshold") != std::string::npos);
  CHECK(table.find("boundary") != std::string::npos);

  const auto j = nlohmann::json::parse(render_json(res));
  CHECK(j["family"] == "bessel");
  CHECK(j["varying"] == "beta");
  CHECK(j["rows"].size() == 7);
  CHECK(j["boundaries"].size() == 1);
  CHECK(std::abs(j["boundaries"][0]["location"].get<double>() - 1.5) < 1e-6);
}

TEST_CASE("four-parameter sweeps work on the raw criteria set") {
  SweepSpec spec;
  spec.family = SweepFamily::FourParam;
  spec.varying = "b";
  spec.lo = 1.0;
  spec.hi = 4.0;
  spec.steps = 31;
  spec.fixed = {{"mu", 1.0}, {"a", 1.0}, {"nu", 1.0}};
  spec.criterion_ids = {"starlike-disk/threshold"};
  const SweepResult res = run_sweep(spec);
  REQUIRE(res.boundaries.size() == 1);
  CHECK(res.boundaries[0].location == doctest::Approx(2.5).epsilon(1e-6));
}

TEST_CASE("two-parameter starlike boundary undercuts the older threshold") {
  SweepSpec spec;
  spec.family = SweepFamily::TwoParam;
  spec.varying = "b";
  spec.lo = 2.0;
  spec.hi = 3.0;
  spec.steps = 21;
  spec.fixed = {{"nu", 1.0}};
  spec.criterion_ids = {"starlike-disk/threshold"};
  const SweepResult res = run_sweep(spec);
  REQUIRE(res.boundaries.size() == 1);
  CHECK(res.boundaries[0].location == doctest::Approx(2.5).epsilon(1e-6));
  CHECK(res.boundaries[0].location < 1.0 + std::sqrt(3.0));
}

TEST_CASE("oracle margins attach to established rows") {
  SweepSpec spec;
  spec.family = SweepFamily::Bessel;
  spec.varying = "beta";
  spec.lo = 1.4;
  spec.hi = 1.7;
  spec.steps = 4;
  spec.criterion_ids = {"starlike-disk/threshold"};
  spec.with_oracle = true;
  const SweepResult res = run_sweep(spec);
  for (const auto& row : res.rows)
    for (const auto& [id, m] : row.margins) {
      CHECK(std::isfinite(m));
      CHECK(m > 0.0);
    }
}

TEST_SUITE_END();
