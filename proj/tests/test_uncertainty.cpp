#include <algorithm>
#include <cstdint>
#include <random>
#include <set>

#include "doctest.h"
#include "om/uncertainty.hpp"

using namespace om;

namespace {

// closed-form count of sign patterns over subsets: sum_m C(n,m) 2^m
std::uint64_t expected_count(int n, int budget) {
  std::uint64_t total = 0, binom = 1, pow2 = 1;
  for (int m = 0; m <= budget && m <= n; ++m) {
    total += binom * pow2;
    binom = binom * static_cast<std::uint64_t>(n - m) / (m + 1);
    pow2 *= 2;
  }
  return total;
}

}  // namespace

TEST_SUITE("uncertainty") {
  TEST_CASE("budget floors gamma * D * H") {
    CHECK(budget(0.0, {24, 1, 1, {}}) == 0);
    CHECK(budget(0.5, {24, 1, 1, {}}) == 12);
    CHECK(budget(1.0, {24, 2, 1, {}}) == 48);
    CHECK(budget(0.3, {24, 1, 1, {}}) == 7);  // 7.2 floors to 7
    // near-integer products are not pushed a step down
    CHECK(budget(1.0 / 3.0, {24, 1, 1, {}}) == 8);
    CHECK_THROWS(budget(-0.1, {24, 1, 1, {}}));
    CHECK_THROWS(budget(1.1, {24, 1, 1, {}}));
  }

  TEST_CASE("realized load applies symmetric deviations") {
    TimeGrid g{2, 1, 1, {}};
    Series3 load(g, 10.0);
    UncertaintyConfig c;
    c.beta_load = 0.5;
    c.gamma_load = {1.0};
    auto r = Realization::zeros(g, 0);
    CHECK(realize_load(load, c, r).at(0, 0, 0) == doctest::Approx(10.0));
    r.load_up.at(0, 0, 0) = 1;
    CHECK(realize_load(load, c, r).at(0, 0, 0) == doctest::Approx(15.0));
    r.load_up.at(0, 0, 0) = 0;
    r.load_down.at(0, 0, 0) = 1;
    CHECK(realize_load(load, c, r).at(0, 0, 0) == doctest::Approx(5.0));
  }

  TEST_CASE("realized tpg mirrors the load rule") {
    TimeGrid g{1, 1, 1, {}};
    std::vector<Series3> nominal{Series3(g, 2.0)};
    UncertaintyConfig c;
    c.beta_tpg = 0.25;
    c.gamma_tpg = {1.0};
    auto r = Realization::zeros(g, 1);
    r.tpg_down[0].at(0, 0, 0) = 1;
    CHECK(realize_tpg(nominal, c, r)[0].at(0, 0, 0) == doctest::Approx(1.5));
    r.tpg_down[0].at(0, 0, 0) = 0;
    CHECK(realize_tpg(nominal, c, r)[0].at(0, 0, 0) == doctest::Approx(2.0));
    nominal[0].at(0, 0, 0) = 0.0;
    r.tpg_up[0].at(0, 0, 0) = 1;
    CHECK(realize_tpg(nominal, c, r)[0].at(0, 0, 0) == doctest::Approx(0.0));
  }

  TEST_CASE("beta zero keeps the forecast whatever the flags") {
    TimeGrid g{3, 1, 1, {}};
    Series3 load(g, 7.0);
    UncertaintyConfig c;
    c.beta_load = 0.0;
    c.gamma_load = {1.0};
    auto r = Realization::zeros(g, 0);
    r.load_up.at(0, 0, 1) = 1;
    const auto l = realize_load(load, c, r);
    for (double v : l) CHECK(v == doctest::Approx(7.0));
  }

  TEST_CASE("invalid realizations are rejected") {
    TimeGrid g{2, 1, 1, {}};
    Series3 load(g, 1.0);
    UncertaintyConfig c;
    c.beta_load = 0.5;
    c.gamma_load = {0.5};  // budget 1
    auto r = Realization::zeros(g, 0);
    r.load_up.at(0, 0, 0) = 1;
    r.load_down.at(0, 0, 0) = 1;  // both directions at once
    CHECK_THROWS(realize_load(load, c, r));
    r.load_down.at(0, 0, 0) = 0;
    r.load_up.at(0, 0, 1) = 1;  // budget exceeded
    CHECK_THROWS(realize_load(load, c, r));
  }

  TEST_CASE("enumeration counts match the closed form") {
    UncertaintyConfig c;
    c.beta_load = 0.5;

    SUBCASE("budget zero yields exactly the nominal point") {
      c.gamma_load = {0.0};
      TimeGrid g{2, 1, 1, {}};
      const auto all = enumerate_realizations(g, c, 0, UncertaintyRestriction::LoadOnly);
      REQUIRE(all.size() == 1);
      CHECK_FALSE(all[0].any());
    }
    SUBCASE("H=2, budget 1: five points") {
      c.gamma_load = {0.5};
      TimeGrid g{2, 1, 1, {}};
      CHECK(enumerate_realizations(g, c, 0, UncertaintyRestriction::LoadOnly).size() == 5);
    }
    SUBCASE("H=3, budget 3: twenty-seven points") {
      c.gamma_load = {1.0};
      TimeGrid g{3, 1, 1, {}};
      CHECK(enumerate_realizations(g, c, 0, UncertaintyRestriction::LoadOnly).size() == 27);
    }
    SUBCASE("random small grids") {
      std::mt19937 rng(3);
      for (int trial = 0; trial < 12; ++trial) {
        TimeGrid g{1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 2), 1, {}};
        const int n = g.days * g.hours_per_day;
        const int budget = std::min(static_cast<int>(rng() % 3), n);
        c.gamma_load = {static_cast<double>(budget) / n};
        const auto all = enumerate_realizations(g, c, 0, UncertaintyRestriction::LoadOnly);
        CHECK(all.size() == expected_count(n, budget));
        CHECK(all.size() == realization_count(g, c, 0, UncertaintyRestriction::LoadOnly));
      }
    }
  }

  TEST_CASE("every enumerated realization is valid and unique") {
    TimeGrid g{3, 1, 1, {}};
    UncertaintyConfig c;
    c.beta_load = 0.5;
    c.beta_tpg = 0.5;
    c.gamma_load = {2.0 / 3.0};  // budget 2
    c.gamma_tpg = {1.0 / 3.0};   // budget 1
    const auto all = enumerate_realizations(g, c, 2, UncertaintyRestriction::Both);
    // load: sum_{m<=2} C(3,m)2^m = 1+6+12 = 19; tpg over 2*3=6 slots, budget 1: 13
    CHECK(all.size() == 19 * 13);
    std::set<std::string> seen;
    for (const auto& r : all) {
      CHECK(r.validate(g, c).empty());
      std::string key;
      for (auto v : r.load_up) key += char('0' + v);
      for (auto v : r.load_down) key += char('0' + v);
      for (const auto& m : r.tpg_up)
        for (auto v : m) key += char('0' + v);
      for (const auto& m : r.tpg_down)
        for (auto v : m) key += char('0' + v);
      CHECK(seen.insert(key).second);
    }
  }

  TEST_CASE("per-unit tpg budgets multiply") {
    TimeGrid g{2, 1, 1, {}};
    UncertaintyConfig c;
    c.beta_tpg = 0.5;
    c.gamma_load = {0.0};
    c.gamma_tpg = {0.5};  // budget 1
    c.tpg_budget_per_unit = true;
    // per unit: 1 + 2*2 = 5; two units -> 25
    CHECK(enumerate_realizations(g, c, 2, UncertaintyRestriction::TpgOnly).size() == 25);
    c.tpg_budget_per_unit = false;
    // shared over 4 slots: 1 + 4*2 = 9
    CHECK(enumerate_realizations(g, c, 2, UncertaintyRestriction::TpgOnly).size() == 9);
  }

  TEST_CASE("enumeration cap is enforced") {
    TimeGrid g{24, 1, 1, {}};
    UncertaintyConfig c;
    c.beta_load = 0.5;
    c.gamma_load = {0.5};
    CHECK_THROWS(enumerate_realizations(g, c, 0, UncertaintyRestriction::LoadOnly, 1000));
  }

  TEST_CASE("realize_load is monotone in the flags") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    TimeGrid g{4, 1, 1, {}};
    Series3 load(g);
    for (auto& v : load) v = 10.0 * u01(rng);
    UncertaintyConfig c;
    c.beta_load = 0.4;
    c.gamma_load = {1.0};
    auto r = Realization::zeros(g, 0);
    r.load_up.at(0, 0, 1) = 1;
    const auto base = realize_load(load, c, r);
    auto more = r;
    more.load_up.at(0, 0, 2) = 1;
    const auto upped = realize_load(load, c, more);
    for (int h = 0; h < 4; ++h) CHECK(upped.at(0, 0, h) >= base.at(0, 0, h));
    auto down = r;
    down.load_down.at(0, 0, 3) = 1;
    const auto downed = realize_load(load, c, down);
    for (int h = 0; h < 4; ++h) CHECK(downed.at(0, 0, h) <= base.at(0, 0, h));
  }
}
