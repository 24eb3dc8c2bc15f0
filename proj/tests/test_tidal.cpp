#include <random>

#include "doctest.h"
#include "om/tidal.hpp"

using namespace om;

namespace {

// independent hand evaluation of the barrage formula, kept apart from the
// implementation on purpose
double barrage_mw(double rho, double grav, double h, double area, double eta) {
  return 0.5 * rho * grav * h * h * area * eta / 3600.0 / 1e6;
}

}  // namespace

TEST_SUITE("tidal") {
  TEST_CASE("power from height") {
    EconomicParams e{0.0, 1e6, 1025.0, 9.81};
    TidalUnit u{"tp", 5.0, 54000, 1000.0, 0.9, 0.0};
    CHECK(tidal_power(0.0, u, e) == doctest::Approx(0.0));
    CHECK(tidal_power(2.0, u, e) == doctest::Approx(0.005027625).epsilon(1e-9));
    CHECK_THROWS(tidal_power(-1.0, u, e));
  }

  TEST_CASE("matches the hand formula on random parameters") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> uh(0.0, 6.0), ua(100.0, 5e5), ue(0.1, 1.0);
    EconomicParams e{0.0, 1e6, 1025.0, 9.81};
    for (int i = 0; i < 100; ++i) {
      TidalUnit u{"tp", 1e9, 1, ua(rng), ue(rng), 0.0};  // cap out of reach
      const double h = uh(rng);
      const double want = barrage_mw(e.sea_density, e.gravity, h, u.area_m2, u.efficiency);
      CHECK(tidal_power(h, u, e) == doctest::Approx(want).epsilon(1e-12));
    }
  }

  TEST_CASE("doubling the height quadruples the uncapped output") {
    EconomicParams e{0.0, 1e6, 1025.0, 9.81};
    TidalUnit u{"tp", 1e9, 1, 2000.0, 0.8, 0.0};
    const double p1 = tidal_power(1.3, u, e);
    CHECK(tidal_power(2.6, u, e) == doctest::Approx(4.0 * p1).epsilon(1e-12));
  }

  TEST_CASE("rated power cap applies and can be disabled") {
    EconomicParams e{0.0, 1e6, 1025.0, 9.81};
    TidalUnit u{"tp", 0.001, 1, 1e5, 0.9, 0.0};
    CHECK(tidal_power(3.0, u, e) == doctest::Approx(0.001));
    CHECK(tidal_power(3.0, u, e, false) > 0.001);
  }

  TEST_CASE("delay shifts within the day and zero-fills") {
    SUBCASE("positive delay moves values earlier") {
      CHECK(apply_delay_day({0, 0, 3, 0}, 1) == std::vector<double>{0, 3, 0, 0});
    }
    SUBCASE("negative delay moves values later") {
      CHECK(apply_delay_day({5, 0, 0, 0}, -2) == std::vector<double>{0, 0, 5, 0});
    }
    SUBCASE("zero delay is the identity") {
      const std::vector<double> v{1, 2, 3, 4, 5};
      CHECK(apply_delay_day(v, 0) == v);
    }
    SUBCASE("|delay| beyond 4 hours is rejected") {
      CHECK_THROWS(apply_delay_day({1, 2, 3}, 5));
      CHECK_THROWS(apply_delay_day({1, 2, 3}, -5));
    }
  }

  TEST_CASE("delay zero-fills exactly |dt| slots per day and preserves the rest") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> uv(0.1, 9.0);  // strictly positive values
    TimeGrid g{8, 3, 2, {}};
    Series3 s(g);
    for (auto& v : s) v = uv(rng);
    for (int dt = -4; dt <= 4; ++dt) {
      const Series3 out = apply_delay(s, dt);
      for (int y = 0; y < g.years; ++y)
        for (int d = 0; d < g.days; ++d) {
          int zeros = 0;
          for (int h = 0; h < g.hours_per_day; ++h) {
            const double v = out.at(y, d, h);
            if (v == 0.0) {
              ++zeros;
            } else {
              CHECK(v == s.at(y, d, h + dt));  // surviving values keep their origin
            }
          }
          CHECK(zeros == std::abs(dt));
        }
    }
  }

  TEST_CASE("nominal profile composes delay and conversion") {
    TimeGrid g{4, 1, 1, {}};
    EconomicParams e{0.0, 1e6, 1025.0, 9.81};
    DeviceCatalog c;
    c.tidal.push_back({"tp1", 5.0, 54000, 2e5, 0.9, 0.0});
    ForecastSet f;
    f.load_mw = Series3(g);
    f.tidal_height_m = Series3(g);
    f.tidal_height_m.at(0, 0, 2) = 2.0;

    SUBCASE("zero heights give a zero profile") {
      ForecastSet z = f;
      z.tidal_height_m = Series3(g);
      const auto prof = nominal_tpg_profile(z, c.tidal, 0, e);
      for (double v : prof[0]) CHECK(v == 0.0);
    }
    SUBCASE("zero delay equals the direct map") {
      const auto prof = nominal_tpg_profile(f, c.tidal, 0, e);
      CHECK(prof[0].at(0, 0, 2) == doctest::Approx(tidal_power(2.0, c.tidal[0], e)));
      CHECK(prof[0].at(0, 0, 1) == 0.0);
    }
    SUBCASE("a single peak moves with the delay, value preserved") {
      const auto prof = nominal_tpg_profile(f, c.tidal, 1, e);
      CHECK(prof[0].at(0, 0, 1) == doctest::Approx(tidal_power(2.0, c.tidal[0], e)));
      CHECK(prof[0].at(0, 0, 2) == 0.0);
    }
  }
}
