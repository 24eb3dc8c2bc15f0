#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "om/ccg.hpp"

namespace om {

/// Fraction of total generated energy per technology; all zero when nothing
/// generates.
struct GenerationShares {
  double du = 0, wind = 0, solar = 0, tpg = 0;
  double sum() const { return du + wind + solar + tpg; }
};
GenerationShares generation_shares(const OperationSchedule&, const DeviceCatalog&);

/// Total load shedding (sum over all hours, MW) of the plan dispatched under
/// its own worst case.
double shed_under_worst(const InvestmentPlan& plan, const DeviceCatalog&, const ForecastSet&,
                        const TimeGrid&, const EconomicParams&, const UncertaintyConfig&,
                        const WorstCaseOptions& = {});

enum class SweepJob : std::uint8_t { Dpm, Rpm, EvaluateWorst };

SweepJob parse_sweep_job(const std::string&);
std::string to_string(SweepJob);

/// One swept parameter. Valid names: beta_load, beta_tpg, beta (both),
/// gamma_load, gamma_tpg, gamma (both), delta_t.
struct SweepAxis {
  std::string param;
  std::vector<double> values;
};

struct SweepCell {
  std::vector<std::pair<std::string, double>> params;  // axis name -> value
  bool ok = false;
  std::string error;
  double cost_inv = 0, cost_ope = 0, total = 0;
  double total_shed_mw = 0, water_slack_t = 0;
  double installed_du = 0, installed_ndu = 0, installed_ess = 0, installed_tpg = 0;
  GenerationShares shares;
  int iterations = 0;  // Rpm cells only
};

struct SweepResult {
  std::vector<SweepAxis> axes;
  std::vector<SweepCell> cells;  // row-major over the axis grid, last axis fastest
};

struct SweepSpec {
  std::vector<SweepAxis> axes;
  SweepJob job = SweepJob::Rpm;
  std::optional<InvestmentPlan> plan;  // required for EvaluateWorst
  int threads = 1;                     // cell-level fan-out
};

/// Run the job over the Cartesian grid of the axes. Cell failures are
/// recorded in the row and do not stop the sweep.
SweepResult sweep(const SweepSpec&, const DeviceCatalog&, const ForecastSet&, const TimeGrid&,
                  const EconomicParams&, const UncertaintyConfig& base, const CcgOptions&);

}  // namespace om
