#include "om/fixture.hpp"

#include <algorithm>
#include <cmath>

namespace om::fixture {

namespace {
constexpr double kPi = 3.14159265358979323846;
// m^2 of barrage per MW of rating; reaches ~1.0 p.u. at a 3.5 m tide with
// eta = 0.9.
constexpr double kAreaPerMw = 65000.0;
}  // namespace

DeviceCatalog reference_catalog() {
  DeviceCatalog c;
  c.dispatchable = {
      {"du1", 6, 140, 44000}, {"du2", 5, 130, 54000}, {"du3", 4, 120, 64000},
      {"du4", 3, 110, 74000}, {"du5", 2, 100, 84000}, {"du6", 1, 90, 94000},
  };
  c.renewable = {
      {"wt1", 4, 150000, RenewableKind::Wind},
      {"pv1", 2, 90000, RenewableKind::Solar},
  };
  c.storage = {
      {"ess1", 1, 6, 60000, 30000, 0.9},
      {"ess2", 2, 6, 30000, 30000, 0.9},
      {"ess3", 3, 6, 20000, 30000, 0.9},
  };
  c.tidal = {
      {"tp1", 5, 54000, 5 * kAreaPerMw, 0.9, 0},
      {"tp2", 4, 72000, 4 * kAreaPerMw, 0.9, 0},
      {"tp3", 3, 90000, 3 * kAreaPerMw, 0.9, 0},
      {"tp4", 2, 108000, 2 * kAreaPerMw, 0.9, 0},
  };
  c.desalination = {450, 1.8e6, 1.0, 0.003, 9000};
  return c;
}

EconomicParams reference_economics() { return {0.08, 1e6, 1025.0, 9.81}; }

TimeGrid reference_grid() { return {24, 1, 1, {}}; }

double diurnal_load_mw(int h) { return 12.0 + 5.0 * std::sin(2 * kPi * (h - 9) / 24.0); }

double semidiurnal_tide_m(int h) { return 2.0 + 1.5 * std::sin(2 * kPi * (h - 4.5) / 12.0); }

double wind_availability_mw(int h, double rated) {
  const double f = 0.45 + 0.30 * std::sin(2 * kPi * (h - 1) / 24.0) +
                   0.15 * std::sin(4 * kPi * h / 24.0 + 0.7);
  return rated * std::clamp(f, 0.0, 1.0);
}

double solar_availability_mw(int h, double rated) {
  if (h <= 6 || h >= 18) return 0.0;  // exact zero at the window edges
  return rated * std::sin(kPi * (h - 6) / 12.0);
}

ForecastSet reference_forecasts(const TimeGrid& g, const DeviceCatalog& cat) {
  ForecastSet f;
  f.load_mw = Series3(g);
  f.tidal_height_m = Series3(g);
  for (const auto& u : cat.renewable) {
    (void)u;
    f.ndu_availability_mw.emplace_back(g);
  }
  for (int y = 0; y < g.years; ++y)
    for (int d = 0; d < g.days; ++d)
      for (int h = 0; h < g.hours_per_day; ++h) {
        f.load_mw.at(y, d, h) = diurnal_load_mw(h);
        f.tidal_height_m.at(y, d, h) = semidiurnal_tide_m(h);
        for (std::size_t j = 0; j < cat.renewable.size(); ++j) {
          const auto& u = cat.renewable[j];
          f.ndu_availability_mw[j].at(y, d, h) =
              u.kind == RenewableKind::Wind ? wind_availability_mw(h, u.rated_power_mw)
                                            : solar_availability_mw(h, u.rated_power_mw);
        }
      }
  return f;
}

}  // namespace om::fixture
