#include "doctest.h"
#include "om/evaluator.hpp"
#include "toys.hpp"

using namespace om;
using om::testing::Toy;

TEST_SUITE("evaluator") {
  TEST_CASE("generation shares sum to one when anything generates") {
    std::mt19937 rng(8);
    Toy t = om::testing::random_toy(rng, false, true, true, false, 4, 0, 0, 0.25);
    auto solver = mip::make_solver("highs");
    const auto d = solve_dpm(t.cat, t.forecasts, t.grid, t.econ, 0, *solver);
    const auto s = generation_shares(d.schedule, t.cat);
    CHECK(s.sum() == doctest::Approx(1.0).epsilon(1e-9));
    const auto empty = generation_shares(OperationSchedule::zeros(t.cat, t.grid), t.cat);
    CHECK(empty.sum() == doctest::Approx(0.0));
  }

  TEST_CASE("robust plan does not shed under its own worst case") {
    // headroom matters: the worst-case load (3 MW) stays below the 6 MW
    // candidate, so the robust optimum must be shed-free
    Toy t = om::testing::single_du_toy(3, 2.0, 6.0, 100.0, 44000.0);
    t.cat.storage.push_back({"ess1", 2.0, 4.0, 20000.0, 20000.0, 0.9});
    t.uncertainty.beta_load = 0.5;
    t.uncertainty.gamma_load = {1.0 / 3.0};  // budget 1
    const auto r = ccg_solve(t.cat, t.forecasts, t.grid, t.econ, t.uncertainty, {});
    CHECK(r.worst_schedule.total_water_slack_t() == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(shed_under_worst(r.plan, t.cat, t.forecasts, t.grid, t.econ, t.uncertainty) ==
          doctest::Approx(0.0).epsilon(1e-6));
  }

  TEST_CASE("a 1x1 sweep equals a single run") {
    std::mt19937 rng(27);
    Toy t = om::testing::random_toy(rng, true, false, false, true, 4, 1, 0, 0.5);
    SweepSpec spec;
    spec.axes = {{"gamma_load", {0.25}}};
    spec.job = SweepJob::Rpm;
    CcgOptions copts;
    const auto table = sweep(spec, t.cat, t.forecasts, t.grid, t.econ, t.uncertainty, copts);
    REQUIRE(table.cells.size() == 1);
    REQUIRE(table.cells[0].ok);

    UncertaintyConfig u = t.uncertainty;
    u.gamma_load = {0.25};
    const auto direct = ccg_solve(t.cat, t.forecasts, t.grid, t.econ, u, copts);
    CHECK(table.cells[0].total == doctest::Approx(direct.total).epsilon(1e-9));
  }

  TEST_CASE("sweep records cell failures and keeps going") {
    std::mt19937 rng(36);
    Toy t = om::testing::random_toy(rng, false, false, false, false, 3, 0, 0, 0.25);
    SweepSpec spec;
    spec.axes = {{"gamma_load", {0.0, 1.0 / 3.0}}};
    spec.job = SweepJob::EvaluateWorst;  // no plan supplied: every cell fails
    const auto table = sweep(spec, t.cat, t.forecasts, t.grid, t.econ, t.uncertainty, {});
    REQUIRE(table.cells.size() == 2);
    for (const auto& c : table.cells) {
      CHECK_FALSE(c.ok);
      CHECK(c.error.find("plan") != std::string::npos);
    }
  }

  TEST_CASE("shedding grows with the deviation under a fixed plan") {
    std::mt19937 rng(44);
    Toy t = om::testing::random_toy(rng, false, false, false, false, 3, 2, 0, 0.25);
    auto solver = mip::make_solver("highs");
    const auto d = solve_dpm(t.cat, t.forecasts, t.grid, t.econ, 0, *solver);
    SweepSpec spec;
    spec.axes = {{"beta_load", {0.25, 0.5, 0.75}}};
    spec.job = SweepJob::EvaluateWorst;
    spec.plan = d.plan;
    const auto table = sweep(spec, t.cat, t.forecasts, t.grid, t.econ, t.uncertainty, {});
    REQUIRE(table.cells.size() == 3);
    double prev = -1;
    for (const auto& c : table.cells) {
      REQUIRE(c.ok);
      CHECK(c.total_shed_mw >= prev - 1e-9);
      prev = c.total_shed_mw;
    }
  }

  TEST_CASE("parallel and serial sweeps agree") {
    std::mt19937 rng(52);
    Toy t = om::testing::random_toy(rng, false, true, false, false, 3, 1, 1, 0.5);
    SweepSpec spec;
    spec.axes = {{"gamma", {0.0, 1.0 / 3.0}}, {"beta", {0.25, 0.5}}};
    spec.job = SweepJob::Rpm;
    const auto serial = sweep(spec, t.cat, t.forecasts, t.grid, t.econ, t.uncertainty, {});
    spec.threads = 4;
    const auto parallel = sweep(spec, t.cat, t.forecasts, t.grid, t.econ, t.uncertainty, {});
    REQUIRE(serial.cells.size() == parallel.cells.size());
    for (std::size_t i = 0; i < serial.cells.size(); ++i) {
      REQUIRE(serial.cells[i].ok);
      REQUIRE(parallel.cells[i].ok);
      CHECK(serial.cells[i].total == doctest::Approx(parallel.cells[i].total).epsilon(1e-9));
    }
  }
}
