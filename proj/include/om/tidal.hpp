#pragma once

#include <vector>

#include "om/catalog.hpp"
#include "om/grid.hpp"

namespace om {

/// Barrage output for one hour at the given tidal height, in MW:
/// (rho * g * h^2 * A * eta / 2) joules over 3600 s, converted to MW and
/// capped at the unit's rated power. The cap can be disabled to inspect the
/// raw physical curve.
double tidal_power(double height_m, const TidalUnit& unit, const EconomicParams& econ,
                   bool cap_at_rated = true);

/// Shift each day's series by delta_t positions, zero-filling the slots the
/// shift vacates. delta_t > 0 moves the peaks earlier in the day; days never
/// wrap into each other. |delta_t| is limited to 4 hours.
Series3 apply_delay(const Series3& series, int delta_t);

/// Same shift on a single day's window; used by apply_delay and handy in
/// tests.
std::vector<double> apply_delay_day(const std::vector<double>& day, int delta_t);

inline constexpr int kMaxTidalDelayHours = 4;

/// Nominal generation profile per tidal unit: delay the height series, then
/// map heights through tidal_power.
std::vector<Series3> nominal_tpg_profile(const ForecastSet& forecasts,
                                         const std::vector<TidalUnit>& units, int delta_t,
                                         const EconomicParams& econ, bool cap_at_rated = true);

}  // namespace om
