#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "om/ccg.hpp"
#include "om/evaluator.hpp"

namespace om::io {

/// Carries every validation problem found, not just the first.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> errors)
      : std::runtime_error(join(errors)), errors_(std::move(errors)) {}
  const std::vector<std::string>& errors() const { return errors_; }

 private:
  static std::string join(const std::vector<std::string>& v);
  std::vector<std::string> errors_;
};

/// Everything one experiment needs, loaded from a single JSON run config
/// that references the catalog JSON and forecast CSV by relative path.
struct RunConfig {
  DeviceCatalog catalog;
  ForecastSet forecasts;
  TimeGrid grid;
  EconomicParams econ;
  UncertaintyConfig uncertainty;
  SolverConfig solver;
  ModelOptions model;
  CcgOptions ccg;  // eps/max_iter/method, solver copied in

  std::filesystem::path config_path, catalog_path, forecasts_path;
};

RunConfig load_run_config(const std::filesystem::path& path);

DeviceCatalog load_catalog_json(const std::filesystem::path& path);
ForecastSet load_forecasts_csv(const std::filesystem::path& path, const TimeGrid& grid,
                               const DeviceCatalog& catalog);

void write_catalog_json(const std::filesystem::path&, const DeviceCatalog&);
void write_forecasts_csv(const std::filesystem::path&, const TimeGrid&, const DeviceCatalog&,
                         const ForecastSet&);

// result files
void write_plan_json(const std::filesystem::path&, const DeviceCatalog&, const InvestmentPlan&);
InvestmentPlan read_plan_json(const std::filesystem::path&, const DeviceCatalog&);
void write_schedule_csv(const std::filesystem::path&, const TimeGrid&, const DeviceCatalog&,
                        const OperationSchedule&, const Series3& realized_load);
struct CostSummary {
  double investment = 0, operation = 0, slack_penalty = 0, total = 0;
  // robust runs also carry the bound trail
  bool robust = false;
  double lb = 0, ub = 0, gap = 0;
  int iterations = 0;
  std::string status;
  // plan evaluations report shedding too
  bool with_shed = false;
  double total_shed_mw = 0, water_slack_t = 0;
};
void write_costs_json(const std::filesystem::path&, const CostSummary&);
void write_trace_csv(const std::filesystem::path&, const std::vector<CcgIterate>&);
void write_realization_json(const std::filesystem::path&, const TimeGrid&, const DeviceCatalog&,
                            const Realization&);
void write_sweep_csv(const std::filesystem::path&, const SweepResult&);

struct ManifestInfo {
  std::string command;
  std::string solver_name, solver_version;
  int seed = 0;
  double wall_seconds = 0;
};
void write_manifest(const std::filesystem::path& out_dir, const RunConfig&, const ManifestInfo&);

/// FNV-1a 64-bit hash of a file's bytes, hex encoded.
std::string fnv1a_file(const std::filesystem::path&);

}  // namespace om::io
