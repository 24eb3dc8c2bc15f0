#include "om/tidal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace om {

double tidal_power(double height_m, const TidalUnit& unit, const EconomicParams& econ,
                   bool cap_at_rated) {
  if (height_m < 0) throw std::invalid_argument("tidal_power: height must be >= 0");
  // 1/2 rho g h^2 A eta is the potential energy of one filling in joules;
  // emptied over one hour it yields watts, hence the /3600 and the /1e6 to MW.
  const double watts = 0.5 * econ.sea_density * econ.gravity * height_m * height_m *
                       unit.area_m2 * unit.efficiency / 3600.0;
  const double mw = watts / 1e6;
  return cap_at_rated ? std::min(mw, unit.rated_power_mw) : mw;
}

std::vector<double> apply_delay_day(const std::vector<double>& day, int delta_t) {
  if (std::abs(delta_t) > kMaxTidalDelayHours)
    throw std::invalid_argument("apply_delay: |delta_t| must be <= " +
                                std::to_string(kMaxTidalDelayHours));
  const int n = static_cast<int>(day.size());
  std::vector<double> out(day.size(), 0.0);
  for (int h = 0; h < n; ++h) {
    // delta_t > 0: peaks arrive earlier, so hour h shows what was predicted
    // for hour h + delta_t.
    const int src = h + delta_t;
    if (src >= 0 && src < n) out[h] = day[src];
  }
  return out;
}

Series3 apply_delay(const Series3& series, int delta_t) {
  if (std::abs(delta_t) > kMaxTidalDelayHours)
    throw std::invalid_argument("apply_delay: |delta_t| must be <= " +
                                std::to_string(kMaxTidalDelayHours));
  if (delta_t == 0) return series;
  Series3 out(series.hours(), series.days(), series.years());
  std::vector<double> day(static_cast<std::size_t>(series.hours()));
  for (int y = 0; y < series.years(); ++y)
    for (int d = 0; d < series.days(); ++d) {
      for (int h = 0; h < series.hours(); ++h) day[h] = series.at(y, d, h);
      const auto shifted = apply_delay_day(day, delta_t);
      for (int h = 0; h < series.hours(); ++h) out.at(y, d, h) = shifted[h];
    }
  return out;
}

std::vector<Series3> nominal_tpg_profile(const ForecastSet& forecasts,
                                         const std::vector<TidalUnit>& units, int delta_t,
                                         const EconomicParams& econ, bool cap_at_rated) {
  const Series3 heights = apply_delay(forecasts.tidal_height_m, delta_t);
  std::vector<Series3> profile(units.size(),
                               Series3(heights.hours(), heights.days(), heights.years()));
  for (std::size_t k = 0; k < units.size(); ++k)
    for (int y = 0; y < heights.years(); ++y)
      for (int d = 0; d < heights.days(); ++d)
        for (int h = 0; h < heights.hours(); ++h)
          profile[k].at(y, d, h) = tidal_power(heights.at(y, d, h), units[k], econ, cap_at_rated);
  return profile;
}

}  // namespace om
