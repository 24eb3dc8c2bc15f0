#include "doctest.h"
#include "om/costs.hpp"
#include "om/fixture.hpp"

using namespace om;

TEST_SUITE("costs") {
  TEST_CASE("present worth factor") {
    CHECK(present_worth_factor(0.1, 1) == doctest::Approx(1.0));
    CHECK(present_worth_factor(0.0, 20) == doctest::Approx(1.0));
    // hand evaluation of 1/1.1^2
    CHECK(present_worth_factor(0.1, 3) == doctest::Approx(1.0 / 1.21).epsilon(1e-12));
    CHECK_THROWS(present_worth_factor(-0.1, 1));
    CHECK_THROWS(present_worth_factor(0.1, 0));
  }

  TEST_CASE("kappa is 1 at year one and strictly decreasing for dr > 0") {
    for (double dr : {0.0, 0.05, 0.3}) CHECK(present_worth_factor(dr, 1) == 1.0);
    double prev = present_worth_factor(0.07, 1);
    for (int y = 2; y <= 10; ++y) {
      const double k = present_worth_factor(0.07, y);
      CHECK(k < prev);
      prev = k;
    }
  }

  TEST_CASE("investment cost of single units") {
    TimeGrid g{24, 1, 1, {}};
    EconomicParams e{0.0, 1e6, 1025, 9.81};
    DeviceCatalog c;
    c.desalination = {10, 0, 1, 0.005, 0};  // cc_F = 0

    SUBCASE("one dispatchable unit, catalog prices") {
      c.dispatchable.push_back({"du1", 6, 140, 44000});
      auto plan = InvestmentPlan::all(c);
      CHECK(investment_cost(c, plan, g, e) == doctest::Approx(264000.0));
      plan.du[0] = 0;
      CHECK(investment_cost(c, plan, g, e) == doctest::Approx(0.0));
    }
    SUBCASE("one storage unit prices power and energy separately") {
      c.storage.push_back({"ess2", 2, 6, 30000, 30000, 0.9});
      CHECK(investment_cost(c, InvestmentPlan::all(c), g, e) == doctest::Approx(240000.0));
    }
    SUBCASE("plan must cover the catalog") {
      c.dispatchable.push_back({"du1", 6, 140, 44000});
      InvestmentPlan p;  // empty
      CHECK_THROWS(investment_cost(c, p, g, e));
    }
  }

  TEST_CASE("investment cost is additive over devices") {
    TimeGrid g{24, 1, 3, {}};
    EconomicParams e{0.08, 1e6, 1025, 9.81};
    const DeviceCatalog c = fixture::reference_catalog();
    const double all = investment_cost(c, InvestmentPlan::all(c), g, e);
    const double none = investment_cost(c, InvestmentPlan::none(c), g, e);
    double sum = none;  // SDU constant
    for (std::size_t i = 0; i < c.dispatchable.size(); ++i) {
      auto p = InvestmentPlan::none(c);
      p.du[i] = 1;
      sum += investment_cost(c, p, g, e) - none;
    }
    for (std::size_t j = 0; j < c.renewable.size(); ++j) {
      auto p = InvestmentPlan::none(c);
      p.ndu[j] = 1;
      sum += investment_cost(c, p, g, e) - none;
    }
    for (std::size_t k = 0; k < c.tidal.size(); ++k) {
      auto p = InvestmentPlan::none(c);
      p.tpg[k] = 1;
      sum += investment_cost(c, p, g, e) - none;
    }
    for (std::size_t l = 0; l < c.storage.size(); ++l) {
      auto p = InvestmentPlan::none(c);
      p.ess[l] = 1;
      sum += investment_cost(c, p, g, e) - none;
    }
    CHECK(all == doctest::Approx(sum).epsilon(1e-12));
  }

  TEST_CASE("operation cost sums fuel, water and shedding") {
    TimeGrid g{1, 1, 1, {}};
    EconomicParams e{0.0, 1e6, 1025, 9.81};
    DeviceCatalog c;
    c.dispatchable.push_back({"du1", 6, 100, 44000});
    c.desalination = {20, 0, 1.0, 0.005, 0};
    auto s = OperationSchedule::zeros(c, g);
    CHECK(operation_cost(s, c, e, g) == doctest::Approx(0.0));

    s.du_gen_mw[0].at(0, 0, 0) = 2.0;  // 2 MW at 100 $/MWh
    s.water_t.at(0, 0, 0) = 10.0;      // 10 t at 1 $/t
    CHECK(operation_cost(s, c, e, g) == doctest::Approx(210.0));

    auto s2 = OperationSchedule::zeros(c, g);
    s2.shed_mw.at(0, 0, 0) = 1.0;
    CHECK(operation_cost(s2, c, e, g) == doctest::Approx(1e6));
  }

  TEST_CASE("day weights scale the operation cost") {
    TimeGrid g{2, 2, 1, {1.0, 3.0}};
    EconomicParams e{0.0, 1e6, 1025, 9.81};
    DeviceCatalog c;
    c.dispatchable.push_back({"du1", 6, 100, 44000});
    c.desalination = {10, 0, 1, 0.005, 0};
    auto s = OperationSchedule::zeros(c, g);
    s.du_gen_mw[0].at(0, 0, 0) = 1.0;
    s.du_gen_mw[0].at(0, 1, 0) = 1.0;
    CHECK(operation_cost(s, c, e, g) == doctest::Approx(100.0 + 300.0));
  }
}
