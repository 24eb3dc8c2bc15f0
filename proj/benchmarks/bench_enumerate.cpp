// Times the enumeration worst-case oracle and the sweep harness with the
// serial reference path against the OpenMP fan-out, checking that both give
// identical answers.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "om/evaluator.hpp"
#include "om/fixture.hpp"

using namespace om;

namespace {

template <typename F>
double timed(F&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

struct Bench {
  DeviceCatalog cat;
  TimeGrid grid{6, 1, 1, {}};
  EconomicParams econ{0.08, 1e6, 1025.0, 9.81};
  ForecastSet forecasts;
  UncertaintyConfig u;

  Bench() {
    cat.dispatchable = {{"du1", 6, 140, 44000}, {"du2", 5, 130, 54000}};
    cat.storage = {{"ess1", 2, 6, 30000, 30000, 0.9}};
    cat.tidal = {{"tp1", 5, 54000, 325000, 0.9, 0}};
    cat.desalination = {50, 1e5, 1.0, 0.003, 300};
    forecasts.load_mw = Series3(grid);
    forecasts.tidal_height_m = Series3(grid);
    for (int h = 0; h < grid.hours_per_day; ++h) {
      forecasts.load_mw.at(0, 0, h) = 5.0 + 3.0 * (h % 3);
      forecasts.tidal_height_m.at(0, 0, h) = fixture::semidiurnal_tide_m(4 * h);
    }
    u.beta_load = u.beta_tpg = 0.5;
    u.gamma_load = {2.0 / grid.hours_per_day};
    u.gamma_tpg = {2.0 / grid.hours_per_day};
  }
};

}  // namespace

int main() {
  const Bench b;
  const auto plan = InvestmentPlan::all(b.cat);
  const auto n = realization_count(b.grid, b.u, b.cat.num_tpg(), UncertaintyRestriction::Both);

  int hw = 1;
#ifdef _OPENMP
  hw = omp_get_max_threads();
#endif
  std::printf("enumeration oracle: %llu realizations, %d hardware threads\n",
              static_cast<unsigned long long>(n), hw);

  WorstCaseResult serial_res, parallel_res;
  WorstCaseOptions opts;
  opts.method = WorstCaseMethod::Enumerate;

  opts.solver.threads = 1;
  const double t_serial = timed([&] {
    serial_res = worst_case(plan, b.cat, b.forecasts, b.grid, b.econ, b.u, opts);
  });

  opts.solver.threads = hw;
  const double t_parallel = timed([&] {
    parallel_res = worst_case(plan, b.cat, b.forecasts, b.grid, b.econ, b.u, opts);
  });

  std::printf("  serial reference : %8.2f s  (worst cost %.4f)\n", t_serial,
              serial_res.ope_cost);
  std::printf("  openmp x%-8d : %8.2f s  (worst cost %.4f)\n", hw, t_parallel,
              parallel_res.ope_cost);
  std::printf("  speedup          : %8.2fx\n", t_serial / t_parallel);
  if (serial_res.ope_cost != parallel_res.ope_cost ||
      !(serial_res.realization == parallel_res.realization)) {
    std::printf("MISMATCH between serial and parallel results\n");
    return 1;
  }

  SweepSpec spec;
  spec.axes = {{"gamma", {0.0, 1.0 / 6.0, 2.0 / 6.0}}, {"beta", {0.25, 0.5}}};
  spec.job = SweepJob::Rpm;
  CcgOptions copts;
  SweepResult sweep_serial, sweep_parallel;

  spec.threads = 1;
  const double s_serial = timed([&] {
    sweep_serial = sweep(spec, b.cat, b.forecasts, b.grid, b.econ, b.u, copts);
  });
  spec.threads = hw;
  const double s_parallel = timed([&] {
    sweep_parallel = sweep(spec, b.cat, b.forecasts, b.grid, b.econ, b.u, copts);
  });

  std::printf("sweep harness: %zu robust cells\n", sweep_serial.cells.size());
  std::printf("  serial reference : %8.2f s\n", s_serial);
  std::printf("  openmp x%-8d : %8.2f s\n", hw, s_parallel);
  std::printf("  speedup          : %8.2fx\n", s_serial / s_parallel);
  for (std::size_t i = 0; i < sweep_serial.cells.size(); ++i)
    if (sweep_serial.cells[i].total != sweep_parallel.cells[i].total) {
      std::printf("MISMATCH in sweep cell %zu\n", i);
      return 1;
    }
  return 0;
}
