#include <cmath>

#include "doctest.h"
#include "om/ccg.hpp"
#include "om/verify.hpp"
#include "toys.hpp"

using namespace om;
using om::testing::Toy;

namespace {

WorstCaseOptions wc_opts(WorstCaseMethod m, int threads = 1) {
  WorstCaseOptions o;
  o.method = m;
  o.solver.threads = threads;
  return o;
}

}  // namespace

TEST_SUITE("robust") {
  TEST_CASE("zero budgets reduce the worst case to the nominal dispatch") {
    std::mt19937 rng(31);
    Toy t = om::testing::random_toy(rng, true, true, false, true, 4, 0, 0, 0.5);
    const auto plan = InvestmentPlan::all(t.cat);
    auto solver = mip::make_solver("highs");
    const auto nominal = dispatch(plan, Realization::zeros(t.grid, 1), t.cat, t.forecasts,
                                  t.grid, t.econ, t.uncertainty, *solver);
    for (auto m : {WorstCaseMethod::DualMilp, WorstCaseMethod::Enumerate}) {
      const auto wc =
          worst_case(plan, t.cat, t.forecasts, t.grid, t.econ, t.uncertainty, wc_opts(m));
      CHECK_FALSE(wc.realization.any());
      CHECK(wc.ope_cost == doctest::Approx(nominal.objective).epsilon(1e-9));
    }
  }

  TEST_CASE("two-hour toy flags the larger load hour as up") {
    Toy t = om::testing::single_du_toy(2, 1.0, 6.0, 100.0, 44000.0);
    t.forecasts.load_mw.at(0, 0, 0) = 1.0;
    t.forecasts.load_mw.at(0, 0, 1) = 3.0;
    t.uncertainty.beta_load = 0.5;
    t.uncertainty.gamma_load = {0.5};  // budget 1
    const auto plan = InvestmentPlan::all(t.cat);
    for (auto m : {WorstCaseMethod::DualMilp, WorstCaseMethod::Enumerate}) {
      const auto wc =
          worst_case(plan, t.cat, t.forecasts, t.grid, t.econ, t.uncertainty, wc_opts(m));
      CHECK(wc.realization.load_up.at(0, 0, 1) == 1);
      CHECK(wc.realization.load_up.at(0, 0, 0) == 0);
      // serving 1 + 4.5 MWh at 100 $/MWh
      CHECK(wc.ope_cost == doctest::Approx(550.0).epsilon(1e-9));
    }
  }

  TEST_CASE("dual reformulation agrees with enumeration") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 5; ++trial) {
      Toy t = om::testing::random_toy(rng, trial % 2 == 0, trial % 2 == 1, false,
                                      trial % 3 == 0, 3 + trial % 2, 1, 1, 0.5);
      auto solver = mip::make_solver("highs");
      const auto d = solve_dpm(t.cat, t.forecasts, t.grid, t.econ, 0, *solver);
      const auto dual = worst_case(d.plan, t.cat, t.forecasts, t.grid, t.econ, t.uncertainty,
                                   wc_opts(WorstCaseMethod::DualMilp));
      const auto enumd = worst_case(d.plan, t.cat, t.forecasts, t.grid, t.econ, t.uncertainty,
                                    wc_opts(WorstCaseMethod::Enumerate));
      CHECK(dual.ope_cost ==
            doctest::Approx(enumd.ope_cost).epsilon(1e-6));
      CHECK(dual.milp_objective == doctest::Approx(dual.ope_cost).epsilon(1e-6));
    }
  }

  TEST_CASE("parallel enumeration matches the serial reference") {
    std::mt19937 rng(99);
    Toy t = om::testing::random_toy(rng, true, true, false, true, 4, 2, 1, 0.5);
    const auto plan = InvestmentPlan::all(t.cat);
    const auto serial = worst_case(plan, t.cat, t.forecasts, t.grid, t.econ, t.uncertainty,
                                   wc_opts(WorstCaseMethod::Enumerate, 1));
    const auto parallel = worst_case(plan, t.cat, t.forecasts, t.grid, t.econ, t.uncertainty,
                                     wc_opts(WorstCaseMethod::Enumerate, 4));
    CHECK(serial.evaluated == parallel.evaluated);
    CHECK(serial.ope_cost == doctest::Approx(parallel.ope_cost).epsilon(1e-12));
    CHECK(serial.realization == parallel.realization);
  }

  TEST_CASE("unbuilt tidal units leave the worst cost unchanged by their flags") {
    std::mt19937 rng(15);
    Toy t = om::testing::random_toy(rng, false, true, false, false, 3, 1, 1, 0.5);
    auto plan = InvestmentPlan::all(t.cat);
    plan.tpg[0] = 0;  // tidal candidate exists but is not built
    const auto dual = worst_case(plan, t.cat, t.forecasts, t.grid, t.econ, t.uncertainty,
                                 wc_opts(WorstCaseMethod::DualMilp));
    const auto enumd = worst_case(plan, t.cat, t.forecasts, t.grid, t.econ, t.uncertainty,
                                  wc_opts(WorstCaseMethod::Enumerate));
    CHECK(dual.ope_cost == doctest::Approx(enumd.ope_cost).epsilon(1e-6));
    // and the tpg flags of the enumerated winner cannot change the cost
    auto solver = mip::make_solver("highs");
    auto stripped = enumd.realization;
    for (auto& m : stripped.tpg_up) m = Mask3(t.grid);
    for (auto& m : stripped.tpg_down) m = Mask3(t.grid);
    const auto re = dispatch(plan, stripped, t.cat, t.forecasts, t.grid, t.econ, t.uncertainty,
                             *solver);
    CHECK(re.objective == doctest::Approx(enumd.ope_cost).epsilon(1e-9));
  }

  TEST_CASE("master with an empty pool is the investment-only problem") {
    Toy t = om::testing::single_du_toy(3, 2.0, 6.0, 100.0, 44000.0);
    auto solver = mip::make_solver("highs");
    const auto [plan, lb] = master_solve(t.cat, t.forecasts, t.grid, t.econ, t.uncertainty, {},
                                         *solver);
    CHECK(plan.du[0] == 1);  // adequacy forces the build
    CHECK(lb == doctest::Approx(6.0 * 44000.0));
  }

  TEST_CASE("master pooling the nominal point reproduces the DPM") {
    std::mt19937 rng(41);
    Toy t = om::testing::random_toy(rng, true, false, false, true, 4, 0, 0, 0.25);
    auto solver = mip::make_solver("highs");
    const auto d = solve_dpm(t.cat, t.forecasts, t.grid, t.econ, 0, *solver);
    const std::vector<Realization> pool{Realization::zeros(t.grid, 0)};
    const auto [plan, lb] = master_solve(t.cat, t.forecasts, t.grid, t.econ, t.uncertainty, pool,
                                         *solver);
    CHECK(lb == doctest::Approx(d.total).epsilon(1e-9));
    // a duplicated copy changes nothing
    const std::vector<Realization> pool2{pool[0], pool[0]};
    const auto [plan2, lb2] = master_solve(t.cat, t.forecasts, t.grid, t.econ, t.uncertainty,
                                           pool2, *solver);
    CHECK(lb2 == doctest::Approx(lb).epsilon(1e-9));
  }

  TEST_CASE("ccg with zero budgets terminates quickly at the DPM answer") {
    std::mt19937 rng(55);
    Toy t = om::testing::random_toy(rng, true, true, false, true, 4, 0, 0, 0.5);
    auto solver = mip::make_solver("highs");
    const auto d = solve_dpm(t.cat, t.forecasts, t.grid, t.econ, 0, *solver);
    const auto r = ccg_solve(t.cat, t.forecasts, t.grid, t.econ, t.uncertainty, {});
    CHECK(r.state.status == CcgStatus::Converged);
    CHECK(r.state.iterations <= 2);
    CHECK(r.total == doctest::Approx(d.total).epsilon(1e-6));
  }

  TEST_CASE("ccg bounds are monotone and close on a toy") {
    std::mt19937 rng(63);
    Toy t = om::testing::random_toy(rng, true, true, false, true, 4, 1, 1, 0.5);
    CcgOptions opts;
    opts.eps = 1e-6;
    const auto r = ccg_solve(t.cat, t.forecasts, t.grid, t.econ, t.uncertainty, opts);
    CHECK(r.state.status == CcgStatus::Converged);
    CHECK(r.state.gap <= 1e-6);
    double prev_lb = -1e300, prev_ub = 1e300;
    for (const auto& it : r.state.trace) {
      CHECK(it.lb >= prev_lb - 1e-6 * std::abs(it.lb));
      CHECK(it.ub <= prev_ub + 1e-6 * std::abs(it.ub));
      CHECK(it.lb <= it.ub + 1e-6 * std::abs(it.ub));
      prev_lb = it.lb;
      prev_ub = it.ub;
    }
    // the worst-case schedule of the incumbent verifies under its realization
    const auto inputs =
        realized_inputs(t.forecasts, t.cat, t.uncertainty, r.worst_realization, t.econ);
    CHECK(verify_schedule(r.plan, r.worst_schedule, inputs, t.cat, t.grid).empty());
  }

  TEST_CASE("robust cost dominates the deterministic cost") {
    std::mt19937 rng(70);
    for (int trial = 0; trial < 3; ++trial) {
      Toy t = om::testing::random_toy(rng, trial % 2 == 0, true, false, trial == 1, 3, 1, 1,
                                      0.5);
      auto solver = mip::make_solver("highs");
      const auto d = solve_dpm(t.cat, t.forecasts, t.grid, t.econ, 0, *solver);
      const auto r = ccg_solve(t.cat, t.forecasts, t.grid, t.econ, t.uncertainty, {});
      CHECK(r.total >= d.total - 1e-6 * std::abs(d.total));
    }
  }

  TEST_CASE("per-year budgets bind independently across a two-year horizon") {
    Toy t = om::testing::single_du_toy(2, 2.0, 6.0, 100.0, 44000.0);
    t.grid.years = 2;
    t.forecasts.load_mw = Series3(t.grid, 2.0);
    t.forecasts.load_mw.at(1, 0, 1) = 3.0;  // year 2 has the larger slot
    t.forecasts.tidal_height_m = Series3(t.grid, 0.0);
    t.econ.discount_rate = 0.1;
    t.uncertainty.beta_load = 0.5;
    t.uncertainty.gamma_load = {0.5, 0.0};  // year 1 may deviate once, year 2 not at all
    const auto plan = InvestmentPlan::all(t.cat);
    for (auto m : {WorstCaseMethod::DualMilp, WorstCaseMethod::Enumerate}) {
      const auto wc =
          worst_case(plan, t.cat, t.forecasts, t.grid, t.econ, t.uncertainty, wc_opts(m));
      CHECK(wc.realization.load_flag_count(0) == 1);
      CHECK(wc.realization.load_flag_count(1) == 0);
      // year 1 serves 2+3 (one slot up by 1 MW), year 2 serves 2+3; the
      // operation cost carries no discounting
      CHECK(wc.ope_cost == doctest::Approx(10.0 * 100.0).epsilon(1e-9));
    }
  }

  TEST_CASE("ccg works with the enumeration oracle as the subproblem") {
    std::mt19937 rng(81);
    Toy t = om::testing::random_toy(rng, false, true, false, false, 3, 1, 1, 0.5);
    CcgOptions dual_opts, enum_opts;
    enum_opts.method = WorstCaseMethod::Enumerate;
    const auto a = ccg_solve(t.cat, t.forecasts, t.grid, t.econ, t.uncertainty, dual_opts);
    const auto b = ccg_solve(t.cat, t.forecasts, t.grid, t.econ, t.uncertainty, enum_opts);
    CHECK(a.total == doctest::Approx(b.total).epsilon(1e-6));
  }
}
