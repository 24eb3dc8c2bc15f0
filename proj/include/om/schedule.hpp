#pragma once

#include <vector>

#include "om/catalog.hpp"
#include "om/grid.hpp"

namespace om {

/// Hourly dispatch for one plan under one realization of the data. The water
/// slack is the per-(d,y) shortfall tolerated by the penalized daily demand
/// constraint; any positive value flags a structurally undersized plan.
struct OperationSchedule {
  std::vector<Series3> du_gen_mw;
  std::vector<Series3> ndu_gen_mw;
  std::vector<Series3> tpg_gen_mw;
  std::vector<Series3> ess_charge_mw;
  std::vector<Series3> ess_discharge_mw;
  std::vector<Series3> ess_soc_mwh;
  Series3 water_t;
  Series3 shed_mw;
  std::vector<double> water_slack_t;  // indexed y * D + d

  double cost_inv = 0;    // $, investment part of the owning solution
  double cost_ope = 0;    // $, operation cost per the cost model (no slack term)
  double cost_slack = 0;  // $, water-slack penalty carried by the dispatch objective

  static OperationSchedule zeros(const DeviceCatalog& c, const TimeGrid& g);

  double total_shed_mw() const {
    double s = 0;
    for (double v : shed_mw) s += v;
    return s;
  }
  double total_water_slack_t() const {
    double s = 0;
    for (double v : water_slack_t) s += v;
    return s;
  }
  /// Total generated energy per technology class {du, wind, solar, tpg}.
  struct GenerationTotals {
    double du = 0, wind = 0, solar = 0, tpg = 0;
    double total() const { return du + wind + solar + tpg; }
  };
  GenerationTotals generation_totals(const DeviceCatalog& c) const;
};

}  // namespace om
