#include "om/evaluator.hpp"

#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace om {

GenerationShares generation_shares(const OperationSchedule& s, const DeviceCatalog& c) {
  const auto t = s.generation_totals(c);
  GenerationShares out;
  if (t.total() <= 0) return out;
  out.du = t.du / t.total();
  out.wind = t.wind / t.total();
  out.solar = t.solar / t.total();
  out.tpg = t.tpg / t.total();
  return out;
}

double shed_under_worst(const InvestmentPlan& plan, const DeviceCatalog& cat,
                        const ForecastSet& f, const TimeGrid& g, const EconomicParams& econ,
                        const UncertaintyConfig& u, const WorstCaseOptions& opts) {
  return worst_case(plan, cat, f, g, econ, u, opts).schedule.total_shed_mw();
}

SweepJob parse_sweep_job(const std::string& s) {
  if (s == "dpm") return SweepJob::Dpm;
  if (s == "rpm") return SweepJob::Rpm;
  if (s == "evaluate" || s == "evaluate-worst") return SweepJob::EvaluateWorst;
  throw std::invalid_argument("unknown sweep job '" + s + "' (use dpm|rpm|evaluate)");
}

std::string to_string(SweepJob j) {
  switch (j) {
    case SweepJob::Dpm: return "dpm";
    case SweepJob::Rpm: return "rpm";
    case SweepJob::EvaluateWorst: return "evaluate";
  }
  return "unknown";
}

namespace {

void apply_param(UncertaintyConfig& u, const std::string& name, double value) {
  if (name == "beta_load") {
    u.beta_load = value;
  } else if (name == "beta_tpg") {
    u.beta_tpg = value;
  } else if (name == "beta") {
    u.beta_load = u.beta_tpg = value;
  } else if (name == "gamma_load") {
    u.gamma_load = {value};
  } else if (name == "gamma_tpg") {
    u.gamma_tpg = {value};
  } else if (name == "gamma") {
    u.gamma_load = {value};
    u.gamma_tpg = {value};
  } else if (name == "delta_t") {
    u.delta_t = static_cast<int>(std::lround(value));
  } else {
    throw std::invalid_argument("unknown sweep parameter '" + name + "'");
  }
}

void fill_cell_from_schedule(SweepCell& cell, const OperationSchedule& s,
                             const InvestmentPlan& plan, const DeviceCatalog& cat) {
  cell.total_shed_mw = s.total_shed_mw();
  cell.water_slack_t = s.total_water_slack_t();
  cell.installed_du = plan.installed_du_mw(cat);
  cell.installed_ndu = plan.installed_ndu_mw(cat);
  cell.installed_ess = plan.installed_ess_mw(cat);
  cell.installed_tpg = plan.installed_tpg_mw(cat);
  cell.shares = generation_shares(s, cat);
}

SweepCell run_cell(const SweepSpec& spec, const std::vector<int>& coord,
                   const DeviceCatalog& cat, const ForecastSet& f, const TimeGrid& g,
                   const EconomicParams& econ, const UncertaintyConfig& base,
                   const CcgOptions& copts) {
  SweepCell cell;
  UncertaintyConfig u = base;
  for (std::size_t a = 0; a < spec.axes.size(); ++a) {
    const double v = spec.axes[a].values[static_cast<std::size_t>(coord[a])];
    cell.params.emplace_back(spec.axes[a].param, v);
    apply_param(u, spec.axes[a].param, v);
  }
  try {
    switch (spec.job) {
      case SweepJob::Dpm: {
        auto solver = copts.solver.make();
        const PlanResult r = solve_dpm(cat, f, g, econ, u.delta_t, *solver,
                                       copts.solver.options, copts.model);
        cell.cost_inv = r.cost_inv;
        cell.cost_ope = r.cost_ope;
        cell.total = r.total;
        fill_cell_from_schedule(cell, r.schedule, r.plan, cat);
        break;
      }
      case SweepJob::Rpm: {
        const CcgResult r = ccg_solve(cat, f, g, econ, u, copts);
        cell.cost_inv = r.cost_inv;
        cell.cost_ope = r.worst_ope_cost;
        cell.total = r.total;
        cell.iterations = r.state.iterations;
        fill_cell_from_schedule(cell, r.worst_schedule, r.plan, cat);
        break;
      }
      case SweepJob::EvaluateWorst: {
        if (!spec.plan) throw std::invalid_argument("evaluate sweep needs a fixed plan");
        WorstCaseOptions wopts;
        wopts.method = copts.method;
        wopts.solver = copts.solver;
        wopts.model = copts.model;
        wopts.enumeration_cap = copts.enumeration_cap;
        const WorstCaseResult r = worst_case(*spec.plan, cat, f, g, econ, u, wopts);
        cell.cost_inv = investment_cost(cat, *spec.plan, g, econ);
        cell.cost_ope = r.ope_cost;
        cell.total = cell.cost_inv + cell.cost_ope;
        fill_cell_from_schedule(cell, r.schedule, *spec.plan, cat);
        break;
      }
    }
    cell.ok = true;
  } catch (const std::exception& e) {
    cell.ok = false;
    cell.error = e.what();
  }
  return cell;
}

}  // namespace

SweepResult sweep(const SweepSpec& spec, const DeviceCatalog& cat, const ForecastSet& f,
                  const TimeGrid& g, const EconomicParams& econ, const UncertaintyConfig& base,
                  const CcgOptions& copts) {
  if (spec.axes.empty()) throw std::invalid_argument("sweep: need at least one axis");
  for (const auto& a : spec.axes)
    if (a.values.empty()) throw std::invalid_argument("sweep: axis '" + a.param + "' is empty");

  std::int64_t n = 1;
  for (const auto& a : spec.axes) n *= static_cast<std::int64_t>(a.values.size());

  auto coord_of = [&](std::int64_t idx) {
    std::vector<int> coord(spec.axes.size(), 0);
    for (std::size_t a = spec.axes.size(); a-- > 0;) {
      const auto sz = static_cast<std::int64_t>(spec.axes[a].values.size());
      coord[a] = static_cast<int>(idx % sz);
      idx /= sz;
    }
    return coord;
  };

  SweepResult out;
  out.axes = spec.axes;
  out.cells.resize(static_cast<std::size_t>(n));

#ifdef _OPENMP
  if (spec.threads > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(spec.threads)
    for (std::int64_t i = 0; i < n; ++i)
      out.cells[static_cast<std::size_t>(i)] =
          run_cell(spec, coord_of(i), cat, f, g, econ, base, copts);
    return out;
  }
#endif
  for (std::int64_t i = 0; i < n; ++i)
    out.cells[static_cast<std::size_t>(i)] =
        run_cell(spec, coord_of(i), cat, f, g, econ, base, copts);
  return out;
}

}  // namespace om
