#include <sstream>

#include "doctest.h"
#include "om/dpm.hpp"
#include "om/mip/mps.hpp"
#include "om/verify.hpp"
#include "toys.hpp"

using namespace om;
using om::testing::Toy;

TEST_SUITE("dpm") {
  TEST_CASE("single candidate instance solves by hand") {
    // one 6 MW unit, flat 1 MW load, no water: build it and run at 1 MW
    Toy t = om::testing::single_du_toy(24, 1.0, 6.0, 100.0, 44000.0);
    auto solver = mip::make_solver("highs");
    const auto r = solve_dpm(t.cat, t.forecasts, t.grid, t.econ, 0, *solver);
    CHECK(r.plan.du[0] == 1);
    for (int h = 0; h < 24; ++h)
      CHECK(r.schedule.du_gen_mw[0].at(0, 0, h) == doctest::Approx(1.0));
    CHECK(r.cost_inv == doctest::Approx(6.0 * 44000.0));
    CHECK(r.cost_ope == doctest::Approx(24.0 * 100.0));
    CHECK(r.total == doctest::Approx(r.cost_inv + r.cost_ope).epsilon(1e-9));
    const auto inputs = nominal_inputs(t.forecasts, t.cat, 0, t.econ);
    CHECK(verify_schedule(r.plan, r.schedule, inputs, t.cat, t.grid).empty());
  }

  TEST_CASE("zero load and zero water builds nothing, pays the SDU constant") {
    Toy t = om::testing::single_du_toy(6, 0.0, 6.0, 100.0, 44000.0);
    t.cat.desalination.inv_cost_per_year = 5000.0;
    auto solver = mip::make_solver("highs");
    const auto r = solve_dpm(t.cat, t.forecasts, t.grid, t.econ, 0, *solver);
    CHECK(r.plan.du[0] == 0);
    CHECK(r.total == doctest::Approx(5000.0));
  }

  TEST_CASE("tight water demand pins production at capacity") {
    Toy t = om::testing::single_du_toy(2, 1.0, 6.0, 100.0, 44000.0);
    t.cat.desalination = {5.0, 0.0, 1.0, 0.01, 10.0};  // F_0 = H * RC_F
    auto solver = mip::make_solver("highs");
    const auto r = solve_dpm(t.cat, t.forecasts, t.grid, t.econ, 0, *solver);
    for (int h = 0; h < 2; ++h) CHECK(r.schedule.water_t.at(0, 0, h) == doctest::Approx(5.0));
  }

  TEST_CASE("shed penalty magnitude does not change a shed-free plan") {
    std::mt19937 rng(4);
    Toy t = om::testing::random_toy(rng, true, true, false, true, 4, 0, 0, 0.25);
    auto solver = mip::make_solver("highs");
    const auto a = solve_dpm(t.cat, t.forecasts, t.grid, t.econ, 0, *solver);
    Toy t2 = t;
    t2.econ.shed_penalty = 1e9;
    const auto b = solve_dpm(t2.cat, t2.forecasts, t2.grid, t2.econ, 0, *solver);
    CHECK(a.schedule.total_shed_mw() == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(a.plan == b.plan);
    CHECK(a.total == doctest::Approx(b.total).epsilon(1e-9));
  }

  TEST_CASE("adequacy switch leaves an interior optimum alone") {
    Toy t = om::testing::single_du_toy(4, 1.0, 6.0, 100.0, 44000.0);
    auto solver = mip::make_solver("highs");
    const auto on = solve_dpm(t.cat, t.forecasts, t.grid, t.econ, 0, *solver);
    ModelOptions off;
    off.enforce_adequacy = false;
    const auto off_r = solve_dpm(t.cat, t.forecasts, t.grid, t.econ, 0, *solver, {}, off);
    CHECK(on.total == doctest::Approx(off_r.total).epsilon(1e-9));
  }

  TEST_CASE("objective equals the recomputed cost split") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 4; ++trial) {
      Toy t = om::testing::random_toy(rng, trial % 2 == 0, true, trial % 2 == 1, true, 5, 0, 0,
                                      0.25);
      auto solver = mip::make_solver("highs");
      const auto r = solve_dpm(t.cat, t.forecasts, t.grid, t.econ, 0, *solver);
      CHECK(r.total == doctest::Approx(r.cost_inv + r.cost_ope)
                           .epsilon(1e-6));
      const auto inputs = nominal_inputs(t.forecasts, t.cat, 0, t.econ);
      CHECK(verify_schedule(r.plan, r.schedule, inputs, t.cat, t.grid).empty());
    }
  }

  TEST_CASE("cheaper costs can only lower the optimum") {
    std::mt19937 rng(12);
    Toy t = om::testing::random_toy(rng, false, true, false, false, 4, 0, 0, 0.25);
    auto solver = mip::make_solver("highs");
    const auto base = solve_dpm(t.cat, t.forecasts, t.grid, t.econ, 0, *solver);
    Toy cheap = t;
    cheap.cat.dispatchable[0].op_cost_per_mwh *= 0.7;
    cheap.cat.tidal[0].inv_cost_per_mw *= 0.5;
    const auto better = solve_dpm(cheap.cat, cheap.forecasts, cheap.grid, cheap.econ, 0, *solver);
    CHECK(better.total <= base.total + 1e-6);
  }

  TEST_CASE("building the same model twice exports identical bytes") {
    std::mt19937 rng(19);
    Toy t = om::testing::random_toy(rng, true, true, true, true, 4, 0, 0, 0.25);
    std::ostringstream a, b;
    mip::write_mps(build_dpm(t.cat, t.forecasts, t.grid, t.econ, 0).model, a);
    mip::write_mps(build_dpm(t.cat, t.forecasts, t.grid, t.econ, 0).model, b);
    CHECK(a.str() == b.str());
  }

  TEST_CASE("structurally unsatisfiable inputs are rejected at build time") {
    SUBCASE("water demand beyond daily capacity") {
      Toy t = om::testing::single_du_toy(2, 1.0, 6.0, 100.0, 44000.0);
      t.cat.desalination = {5.0, 0.0, 1.0, 0.01, 11.0};  // 11 > 2*5
      CHECK_THROWS_WITH_AS(build_dpm(t.cat, t.forecasts, t.grid, t.econ, 0),
                           doctest::Contains("water demand"), std::runtime_error);
    }
    SUBCASE("load peak beyond every candidate") {
      Toy t = om::testing::single_du_toy(2, 9.0, 6.0, 100.0, 44000.0);
      CHECK_THROWS_WITH_AS(build_dpm(t.cat, t.forecasts, t.grid, t.econ, 0),
                           doctest::Contains("load peak"), std::runtime_error);
    }
  }

  TEST_CASE("tidal delay feeds through to the dispatch bound") {
    std::mt19937 rng(21);
    Toy t = om::testing::random_toy(rng, false, true, false, false, 6, 0, 0, 0.25);
    // make tidal generation nearly free so the tide is always worth using
    t.cat.tidal[0].inv_cost_per_mw = 1000.0;
    auto solver = mip::make_solver("highs");
    for (int dt : {-3, 0, 3}) {
      const auto r = solve_dpm(t.cat, t.forecasts, t.grid, t.econ, dt, *solver);
      const auto inputs = nominal_inputs(t.forecasts, t.cat, dt, t.econ);
      CHECK(verify_schedule(r.plan, r.schedule, inputs, t.cat, t.grid).empty());
      // the schedule must respect the delayed profile, not the undelayed one
      for (int h = 0; h < 6; ++h)
        CHECK(r.schedule.tpg_gen_mw[0].at(0, 0, h) <= inputs.tpg_cap_mw[0].at(0, 0, h) + 1e-9);
    }
  }
}
