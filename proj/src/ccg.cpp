#include "om/ccg.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace om {

std::string to_string(CcgStatus s) {
  switch (s) {
    case CcgStatus::Converged: return "converged";
    case CcgStatus::IterationLimit: return "iteration-limit";
    case CcgStatus::Stalled: return "stalled";
  }
  return "unknown";
}

std::pair<InvestmentPlan, double> master_solve(const DeviceCatalog& cat, const ForecastSet& f,
                                               const TimeGrid& g, const EconomicParams& econ,
                                               const UncertaintyConfig& u,
                                               const std::vector<Realization>& pool,
                                               mip::Solver& solver,
                                               const mip::SolveOptions& sopt,
                                               const ModelOptions& opt) {
  check_structural_feasibility(cat, f, g, opt);

  mip::LinearModel m;
  XCols x = add_investment_columns(m, cat, g, econ, f.max_load(), opt);
  const int eta = m.add_col("eta", 0, mip::kInf, 1.0);

  for (std::size_t r = 0; r < pool.size(); ++r) {
    const RealizedInputs data = realized_inputs(f, cat, u, pool[r], econ, opt);
    const OperationVars ops =
        add_operation_block(m, cat, g, econ, data, &x, nullptr, /*water_slack=*/true,
                            /*costs_in_objective=*/false, "s" + std::to_string(r) + "_");
    // eta >= recourse cost of this scenario copy
    std::vector<std::pair<int, double>> e{{eta, 1.0}};
    for (const auto& [col, c] : ops.cost_terms) e.emplace_back(col, -c);
    m.add_row("epi_s" + std::to_string(r), mip::RowSense::GE, 0.0, e);
  }

  const mip::SolveOutcome o = solver.solve(m, sopt);
  if (o.status == mip::SolveStatus::Infeasible)
    throw std::runtime_error("master infeasible: catalog cannot cover the load peak");
  if (!o.optimal())
    throw std::runtime_error("master solve failed: " + mip::to_string(o.status));
  return {extract_plan(x, o.col_value), o.objective};
}

CcgResult ccg_solve(const DeviceCatalog& cat, const ForecastSet& f, const TimeGrid& g,
                    const EconomicParams& econ, const UncertaintyConfig& u,
                    const CcgOptions& opts) {
  if (auto errs = u.validate(g); !errs.empty()) throw std::invalid_argument(errs.front());

  auto solver = opts.solver.make();
  WorstCaseOptions wopts;
  wopts.method = opts.method;
  wopts.solver = opts.solver;
  wopts.model = opts.model;
  wopts.enumeration_cap = opts.enumeration_cap;

  CcgResult res;
  CcgState& st = res.state;
  st.lb = -mip::kInf;
  st.ub = mip::kInf;
  std::vector<Realization> pool;
  bool have_incumbent = false;

  for (int it = 1; it <= opts.max_iter; ++it) {
    const auto t0 = std::chrono::steady_clock::now();
    auto [plan, lb] = master_solve(cat, f, g, econ, u, pool, *solver, opts.solver.options,
                                   opts.model);
    st.lb = std::max(st.lb, lb);

    const WorstCaseResult wc = worst_case(plan, cat, f, g, econ, u, wopts);
    const double inv = investment_cost(cat, plan, g, econ);
    const double total = inv + wc.ope_cost;
    if (total < st.ub) {
      st.ub = total;
      res.plan = plan;
      res.worst_realization = wc.realization;
      res.worst_schedule = wc.schedule;
      res.worst_schedule.cost_inv = inv;
      res.cost_inv = inv;
      res.worst_ope_cost = wc.ope_cost;
      res.total = total;
      have_incumbent = true;
    }
    st.gap = (st.ub - st.lb) / std::max(std::abs(st.ub), 1e-9);
    st.iterations = it;
    const auto t1 = std::chrono::steady_clock::now();
    st.trace.push_back({it, st.lb, st.ub, st.gap, wc.ope_cost,
                        std::chrono::duration<double>(t1 - t0).count()});

    if (st.gap <= opts.eps) {
      st.status = CcgStatus::Converged;
      break;
    }
    if (std::find(pool.begin(), pool.end(), wc.realization) != pool.end()) {
      // the separating scenario is already pooled; bounds cannot move
      st.status = CcgStatus::Stalled;
      break;
    }
    pool.push_back(wc.realization);
    st.status = CcgStatus::IterationLimit;
  }

  if (!have_incumbent) throw std::logic_error("ccg_solve: no incumbent produced");
  return res;
}

}  // namespace om
