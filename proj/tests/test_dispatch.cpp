#include "doctest.h"
#include "om/dispatch.hpp"
#include "om/verify.hpp"
#include "toys.hpp"

using namespace om;
using om::testing::Toy;

namespace {

Toy water_toy() {
  Toy t = om::testing::single_du_toy(4, 2.0, 6.0, 100.0, 40000.0);
  t.cat.desalination = {5.0, 1000.0, 1.0, 0.01, 12.0};  // 12 t/day, 5 t/h cap
  return t;
}

}  // namespace

TEST_SUITE("dispatch") {
  TEST_CASE("generous plan under no uncertainty serves everything") {
    Toy t = water_toy();
    auto solver = mip::make_solver("highs");
    const auto r = dispatch(InvestmentPlan::all(t.cat), Realization::zeros(t.grid, 0), t.cat,
                            t.forecasts, t.grid, t.econ, t.uncertainty, *solver);
    CHECK(r.schedule.total_shed_mw() == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(r.schedule.total_water_slack_t() == doctest::Approx(0.0).epsilon(1e-9));
    // 2 MW load x 4 h x 100 $ + water: 12 t at 1 $/t + power for water at 100 $/MWh
    const double water_power_cost = 12.0 * 0.01 * 100.0;
    CHECK(r.objective == doctest::Approx(800.0 + 12.0 + water_power_cost));
    const auto inputs = nominal_inputs(t.forecasts, t.cat, 0, t.econ);
    CHECK(verify_schedule(InvestmentPlan::all(t.cat), r.schedule, inputs, t.cat, t.grid).empty());
  }

  TEST_CASE("empty plan sheds the whole load and relies on the water slack") {
    Toy t = water_toy();
    auto solver = mip::make_solver("highs");
    const auto r = dispatch(InvestmentPlan::none(t.cat), Realization::zeros(t.grid, 0), t.cat,
                            t.forecasts, t.grid, t.econ, t.uncertainty, *solver);
    CHECK(r.schedule.total_shed_mw() == doctest::Approx(8.0));         // 2 MW x 4 h
    CHECK(r.schedule.total_water_slack_t() == doctest::Approx(12.0));  // F_0 per day
    const auto inputs = nominal_inputs(t.forecasts, t.cat, 0, t.econ);
    CHECK(
        verify_schedule(InvestmentPlan::none(t.cat), r.schedule, inputs, t.cat, t.grid).empty());
  }

  TEST_CASE("template instantiation moves the annotated data") {
    std::mt19937 rng(1);
    Toy t = om::testing::random_toy(rng, true, true, false, true, 3, 1, 1, 0.5);
    const auto plan = InvestmentPlan::all(t.cat);
    const auto tmpl = make_dispatch_template(plan, t.cat, t.forecasts, t.grid, t.econ,
                                             t.uncertainty);
    auto r = Realization::zeros(t.grid, 1);
    r.load_up.at(0, 0, 1) = 1;
    r.tpg_down[0].at(0, 0, 2) = 1;
    const auto lp = instantiate(tmpl, r);

    const int bal1 = tmpl.vars.balance_rows[1];
    CHECK(lp.row_rhs(bal1) ==
          doctest::Approx(1.5 * t.forecasts.load_mw.at(0, 0, 1)).epsilon(1e-12));
    const int ls1 = tmpl.vars.shed[1];
    CHECK(lp.col_upper(ls1) ==
          doctest::Approx(1.5 * t.forecasts.load_mw.at(0, 0, 1)).epsilon(1e-12));
    const int tp2 = tmpl.vars.tpg[0][2];
    CHECK(lp.col_upper(tp2) ==
          doctest::Approx(0.5 * tmpl.model.col_upper(tp2)).epsilon(1e-12));
    // untouched slots keep the template data
    CHECK(lp.row_rhs(tmpl.vars.balance_rows[0]) ==
          doctest::Approx(t.forecasts.load_mw.at(0, 0, 0)));
  }

  TEST_CASE("storage round trip loses energy by the efficiency") {
    // one DU plus one battery; cheap hour then expensive hour makes the
    // battery shift energy
    Toy t = om::testing::single_du_toy(2, 1.0, 6.0, 100.0, 40000.0);
    t.cat.storage.push_back({"ess1", 5.0, 10.0, 1000.0, 1000.0, 0.9});
    auto solver = mip::make_solver("highs");
    const auto r = dispatch(InvestmentPlan::all(t.cat), Realization::zeros(t.grid, 0), t.cat,
                            t.forecasts, t.grid, t.econ, t.uncertainty, *solver);
    const auto inputs = nominal_inputs(t.forecasts, t.cat, 0, t.econ);
    const auto report =
        verify_schedule(InvestmentPlan::all(t.cat), r.schedule, inputs, t.cat, t.grid);
    CHECK(report.empty());
  }

  TEST_CASE("verifier flags hand-made violations") {
    Toy t = water_toy();
    t.cat.storage.push_back({"ess1", 2.0, 6.0, 1000.0, 1000.0, 0.9});
    const auto plan = InvestmentPlan::all(t.cat);
    const auto inputs = nominal_inputs(t.forecasts, t.cat, 0, t.econ);

    auto feasible = OperationSchedule::zeros(t.cat, t.grid);
    // serve 2 MW with the DU and make 3 t of water every hour (12 total)
    for (int h = 0; h < 4; ++h) {
      feasible.water_t.at(0, 0, h) = 3.0;
      feasible.du_gen_mw[0].at(0, 0, h) = 2.0 + 0.01 * 3.0;
    }
    SUBCASE("hand-built feasible schedule passes") {
      CHECK(verify_schedule(plan, feasible, inputs, t.cat, t.grid).empty());
    }
    SUBCASE("broken storage cycle is cited") {
      auto bad = feasible;
      bad.ess_soc_mwh[0].at(0, 0, 0) = 1.0;  // soc jumps without any charging
      const auto report = verify_schedule(plan, bad, inputs, t.cat, t.grid);
      REQUIRE_FALSE(report.empty());
      bool cyclic = false, dynamics = false;
      for (const auto& v : report) {
        cyclic = cyclic || v.constraint == "soc-cyclic";
        dynamics = dynamics || v.constraint == "soc-dynamics";
      }
      CHECK(cyclic);
      CHECK(dynamics);
    }
    SUBCASE("one ton short of the daily demand is cited") {
      auto bad = feasible;
      bad.water_t.at(0, 0, 0) = 2.0;
      bad.du_gen_mw[0].at(0, 0, 0) = 2.0 + 0.01 * 2.0;
      const auto report = verify_schedule(plan, bad, inputs, t.cat, t.grid);
      REQUIRE(report.size() == 1);
      CHECK(report[0].constraint == "daily-water");
      CHECK(report[0].residual == doctest::Approx(1.0));
    }
    SUBCASE("unbuilt units must stay idle") {
      auto bad = feasible;
      auto none = plan;
      none.ess[0] = 0;
      bad.ess_charge_mw[0].at(0, 0, 1) = 0.5;
      const auto report = verify_schedule(none, bad, inputs, t.cat, t.grid);
      bool found = false;
      for (const auto& v : report) found = found || v.constraint == "charge-cap-upper";
      CHECK(found);
    }
    SUBCASE("balance residual is cited") {
      auto bad = feasible;
      bad.du_gen_mw[0].at(0, 0, 2) += 0.25;
      const auto report = verify_schedule(plan, bad, inputs, t.cat, t.grid);
      REQUIRE(report.size() == 1);
      CHECK(report[0].constraint == "balance");
      CHECK(report[0].residual == doctest::Approx(0.25));
    }
  }

  TEST_CASE("strict rated-power mode widens the renewable bound") {
    std::mt19937 rng(2);
    Toy t = om::testing::random_toy(rng, false, false, true, false, 3, 0, 0, 0.25);
    ModelOptions strict;
    strict.ndu_availability_bound = false;
    const auto avail = nominal_inputs(t.forecasts, t.cat, 0, t.econ);
    const auto rated = nominal_inputs(t.forecasts, t.cat, 0, t.econ, strict);
    for (int h = 0; h < 3; ++h) {
      CHECK(avail.ndu_cap_mw[0].at(0, 0, h) ==
            doctest::Approx(t.forecasts.ndu_availability_mw[0].at(0, 0, h)));
      CHECK(rated.ndu_cap_mw[0].at(0, 0, h) ==
            doctest::Approx(t.cat.renewable[0].rated_power_mw));
    }
  }
}
