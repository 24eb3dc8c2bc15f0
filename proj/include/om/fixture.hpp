#pragma once

#include "om/catalog.hpp"
#include "om/grid.hpp"

namespace om::fixture {

/// The 15-candidate reference catalog: six diesel units, wind + PV, three
/// batteries, four tidal units, plus the compulsory desalination unit.
/// Barrage areas are sized so each unit reaches rated power at the peak of
/// the reference tide (3.5 m); catalogues leave area and efficiency open, so
/// these are fixture choices.
DeviceCatalog reference_catalog();

/// dr = 0.08, shed penalty 1e6 $/MWh, standard seawater density and gravity.
EconomicParams reference_economics();

/// Desk-scale horizon: 24 hours, one representative day, one year.
TimeGrid reference_grid();

/// Diurnal load (7..17 MW, afternoon peak), semidiurnal tide (0.5..3.5 m,
/// 12-hour period), a two-humped wind day and a midday PV bell.
ForecastSet reference_forecasts(const TimeGrid&, const DeviceCatalog&);

double diurnal_load_mw(int h);
double semidiurnal_tide_m(int h);
double wind_availability_mw(int h, double rated);
double solar_availability_mw(int h, double rated);

}  // namespace om::fixture
