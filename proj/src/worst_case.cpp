#include "om/worst_case.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace om {

WorstCaseMethod parse_worst_case_method(const std::string& s) {
  if (s == "dual" || s == "dual_milp") return WorstCaseMethod::DualMilp;
  if (s == "enum" || s == "enumerate") return WorstCaseMethod::Enumerate;
  throw std::invalid_argument("unknown worst-case method '" + s + "' (use dual|enum)");
}

std::string to_string(WorstCaseMethod m) {
  return m == WorstCaseMethod::DualMilp ? "dual" : "enum";
}

namespace {

// Marginal-value bounds for the duals that multiply uncertainty flags. One
// extra MW in the balance is worth at most the cost of the most expensive
// response: re-shedding (nu), or displacing water production into the slack
// penalty (nu * H via the slack rate). Cap-row duals add one fuel price.
struct BigM {
  double row;  // balance-row duals
  double col;  // bound duals of shed and tpg columns
};

BigM derive_big_m(const DeviceCatalog& cat, const EconomicParams& econ, const TimeGrid& g,
                  double scale) {
  const double cmax = cat.max_op_cost();
  BigM m;
  m.row = scale * (econ.shed_penalty * (g.hours_per_day + 1.0) + cmax);
  m.col = m.row + cmax;
  if (!(m.row > 0) || m.row > 1e14 || m.col > 1e14)
    throw std::runtime_error(
        "worst_case: big-M overflow deriving dual bounds for the balance rows (nu=" +
        std::to_string(econ.shed_penalty) + ", H=" + std::to_string(g.hours_per_day) +
        " give M=" + std::to_string(m.row) + ")");
  return m;
}

Realization decode_flags(const DispatchTemplate& t, const std::vector<int>& flag_cols,
                         const std::vector<double>& milp_values, int num_tpg_units) {
  Realization r = Realization::zeros(t.grid, num_tpg_units);
  const TimeGrid& g = t.grid;
  auto value = [&](int flag) {
    const int c = flag_cols[static_cast<std::size_t>(flag)];
    return c >= 0 && milp_values[static_cast<std::size_t>(c)] > 0.5;
  };
  for (int y = 0; y < g.years; ++y)
    for (int d = 0; d < g.days; ++d)
      for (int h = 0; h < g.hours_per_day; ++h) {
        const int s = t.vars.slot(g, y, d, h);
        if (value(t.u_load_up(s))) r.load_up.at(y, d, h) = 1;
        if (value(t.u_load_down(s))) r.load_down.at(y, d, h) = 1;
        for (int k = 0; k < num_tpg_units; ++k) {
          if (value(t.u_tpg_up(k, s))) r.tpg_up[k].at(y, d, h) = 1;
          if (value(t.u_tpg_down(k, s))) r.tpg_down[k].at(y, d, h) = 1;
        }
      }
  return r;
}

}  // namespace

WorstCaseMilp build_worst_case_milp(const DispatchTemplate& t, const TimeGrid& g,
                                    const EconomicParams& econ, const UncertaintyConfig& u,
                                    const DeviceCatalog& cat, double big_m_scale) {
  const mip::LinearModel& p = t.model;
  if (p.objective_offset != 0.0)
    throw std::logic_error("worst_case: inner LP must have no objective offset");
  for (int c = 0; c < p.num_cols(); ++c)
    if (p.col_lower(c) != 0.0)
      throw std::logic_error("worst_case: inner LP columns must have zero lower bounds");

  const BigM M = derive_big_m(cat, econ, g, big_m_scale);

  WorstCaseMilp out;
  mip::LinearModel& m = out.model;
  m.sense = mip::ObjSense::Maximize;

  // Row duals y_r. Annotated rows get finite big-M boxes so the flag
  // products can be linearized; all other duals stay free in their natural
  // sign range.
  std::vector<int> y(static_cast<std::size_t>(p.num_rows()));
  for (int r = 0; r < p.num_rows(); ++r) {
    const bool annotated = !t.row_rhs_terms[static_cast<std::size_t>(r)].empty();
    double lo = -mip::kInf, hi = mip::kInf;
    switch (p.row_sense(r)) {
      case mip::RowSense::GE: lo = 0; hi = annotated ? M.row : mip::kInf; break;
      case mip::RowSense::LE: lo = annotated ? -M.row : -mip::kInf; hi = 0; break;
      case mip::RowSense::EQ:
        lo = annotated ? -M.row : -mip::kInf;
        hi = annotated ? M.row : mip::kInf;
        break;
    }
    y[static_cast<std::size_t>(r)] = m.add_col("y_" + p.row_name(r), lo, hi, p.row_rhs(r));
  }

  // Bound duals w_c for finite upper bounds. Columns pinned at zero with no
  // uncertainty influence drop out of the dual entirely.
  std::vector<int> w(static_cast<std::size_t>(p.num_cols()), -1);
  std::vector<bool> dropped(static_cast<std::size_t>(p.num_cols()), false);
  for (int c = 0; c < p.num_cols(); ++c) {
    const bool annotated = !t.col_ub_terms[static_cast<std::size_t>(c)].empty();
    const double ub = p.col_upper(c);
    if (ub == 0.0 && !annotated) {
      dropped[static_cast<std::size_t>(c)] = true;
      continue;
    }
    if (std::isinf(ub)) continue;  // no bound dual
    w[static_cast<std::size_t>(c)] =
        m.add_col("w_" + p.col_name(c), 0, annotated ? M.col : mip::kInf, -ub);
  }

  // Dual feasibility: for every primal column, sum_r A_rc y_r - w_c <= cost_c.
  {
    std::vector<std::vector<std::pair<int, double>>> col_entries(
        static_cast<std::size_t>(p.num_cols()));
    const auto& er = p.entry_rows();
    const auto& ec = p.entry_cols();
    const auto& ev = p.entry_vals();
    for (std::size_t e = 0; e < ev.size(); ++e)
      col_entries[static_cast<std::size_t>(ec[e])].emplace_back(y[static_cast<std::size_t>(er[e])],
                                                                ev[e]);
    for (int c = 0; c < p.num_cols(); ++c) {
      if (dropped[static_cast<std::size_t>(c)]) continue;
      auto e = col_entries[static_cast<std::size_t>(c)];
      if (w[static_cast<std::size_t>(c)] >= 0)
        e.emplace_back(w[static_cast<std::size_t>(c)], -1.0);
      m.add_row("dual_" + p.col_name(c), mip::RowSense::LE, p.col_cost(c), e);
    }
  }

  // Uncertainty flags that can influence the objective.
  out.flag_cols.assign(static_cast<std::size_t>(t.u_total()), -1);
  auto flag_col = [&](int flag) {
    int& c = out.flag_cols[static_cast<std::size_t>(flag)];
    if (c < 0)
      c = m.add_col("u_" + std::to_string(flag), 0, 1, 0, mip::VarType::Binary);
    return c;
  };

  // Products flag * dual become fresh columns boxed by McCormick rows.
  auto product = [&](int flag, int dual_col, double lo, double hi, double obj_coef,
                     const std::string& name) {
    const int uc = flag_col(flag);
    const int pc = m.add_col(name, std::min(lo, 0.0), std::max(hi, 0.0), obj_coef);
    {
      const std::pair<int, double> e[] = {{pc, 1.0}, {uc, -hi}};
      m.add_row(name + "_ubu", mip::RowSense::LE, 0.0, e);  // p <= hi u
    }
    {
      const std::pair<int, double> e[] = {{pc, 1.0}, {uc, -lo}};
      m.add_row(name + "_lbu", mip::RowSense::GE, 0.0, e);  // p >= lo u
    }
    {
      // p <= y - lo(1-u)  <=>  p - y - lo u <= -lo
      const std::pair<int, double> e[] = {{pc, 1.0}, {dual_col, -1.0}, {uc, -lo}};
      m.add_row(name + "_ubd", mip::RowSense::LE, -lo, e);
    }
    {
      // p >= y - hi(1-u)  <=>  p - y - hi u >= -hi
      const std::pair<int, double> e[] = {{pc, 1.0}, {dual_col, -1.0}, {uc, -hi}};
      m.add_row(name + "_lbd", mip::RowSense::GE, -hi, e);
    }
  };

  for (int r = 0; r < p.num_rows(); ++r)
    for (const auto& [flag, coef] : t.row_rhs_terms[static_cast<std::size_t>(r)])
      product(flag, y[static_cast<std::size_t>(r)], m.col_lower(y[static_cast<std::size_t>(r)]),
              m.col_upper(y[static_cast<std::size_t>(r)]), coef,
              "p_r" + std::to_string(r) + "_u" + std::to_string(flag));
  for (int c = 0; c < p.num_cols(); ++c)
    for (const auto& [flag, coef] : t.col_ub_terms[static_cast<std::size_t>(c)]) {
      const int wc = w[static_cast<std::size_t>(c)];
      if (wc < 0) throw std::logic_error("worst_case: annotated column without bound dual");
      product(flag, wc, 0.0, m.col_upper(wc), -coef,
              "p_c" + std::to_string(c) + "_u" + std::to_string(flag));
    }

  // Flag structure: one direction per slot, flag budget per year.
  const int S = t.vars.slots;
  auto active = [&](int flag) { return out.flag_cols[static_cast<std::size_t>(flag)] >= 0; };
  for (int s = 0; s < S; ++s) {
    if (active(t.u_load_up(s)) && active(t.u_load_down(s))) {
      const std::pair<int, double> e[] = {
          {out.flag_cols[static_cast<std::size_t>(t.u_load_up(s))], 1.0},
          {out.flag_cols[static_cast<std::size_t>(t.u_load_down(s))], 1.0}};
      m.add_row("onedir_load_s" + std::to_string(s), mip::RowSense::LE, 1.0, e);
    }
    for (int k = 0; k < t.num_tpg_units; ++k)
      if (active(t.u_tpg_up(k, s)) && active(t.u_tpg_down(k, s))) {
        const std::pair<int, double> e[] = {
            {out.flag_cols[static_cast<std::size_t>(t.u_tpg_up(k, s))], 1.0},
            {out.flag_cols[static_cast<std::size_t>(t.u_tpg_down(k, s))], 1.0}};
        m.add_row("onedir_tpg" + std::to_string(k) + "_s" + std::to_string(s), mip::RowSense::LE,
                  1.0, e);
      }
  }
  const int slots_per_year = g.days * g.hours_per_day;
  for (int yy = 0; yy < g.years; ++yy) {
    std::vector<std::pair<int, double>> load_e;
    for (int s = yy * slots_per_year; s < (yy + 1) * slots_per_year; ++s) {
      if (active(t.u_load_up(s)))
        load_e.emplace_back(out.flag_cols[static_cast<std::size_t>(t.u_load_up(s))], 1.0);
      if (active(t.u_load_down(s)))
        load_e.emplace_back(out.flag_cols[static_cast<std::size_t>(t.u_load_down(s))], 1.0);
    }
    if (!load_e.empty())
      m.add_row("budget_load_y" + std::to_string(yy), mip::RowSense::LE,
                budget(u.gamma_load_for(yy), g), load_e);

    auto tpg_entries = [&](int k) {
      std::vector<std::pair<int, double>> e;
      for (int s = yy * slots_per_year; s < (yy + 1) * slots_per_year; ++s) {
        if (active(t.u_tpg_up(k, s)))
          e.emplace_back(out.flag_cols[static_cast<std::size_t>(t.u_tpg_up(k, s))], 1.0);
        if (active(t.u_tpg_down(k, s)))
          e.emplace_back(out.flag_cols[static_cast<std::size_t>(t.u_tpg_down(k, s))], 1.0);
      }
      return e;
    };
    if (u.tpg_budget_per_unit) {
      for (int k = 0; k < t.num_tpg_units; ++k) {
        auto e = tpg_entries(k);
        if (!e.empty())
          m.add_row("budget_tpg" + std::to_string(k) + "_y" + std::to_string(yy),
                    mip::RowSense::LE, budget(u.gamma_tpg_for(yy), g), e);
      }
    } else {
      std::vector<std::pair<int, double>> e;
      for (int k = 0; k < t.num_tpg_units; ++k)
        for (auto& entry : tpg_entries(k)) e.push_back(entry);
      if (!e.empty())
        m.add_row("budget_tpg_y" + std::to_string(yy), mip::RowSense::LE,
                  budget(u.gamma_tpg_for(yy), g), e);
    }
  }

  return out;
}

namespace {

WorstCaseResult worst_case_dual(const DispatchTemplate& t, const DeviceCatalog& cat,
                                const TimeGrid& g, const EconomicParams& econ,
                                const UncertaintyConfig& u, const WorstCaseOptions& opts) {
  auto solver = opts.solver.make();
  double scale = 1.0;
  for (int attempt = 0;; ++attempt) {
    const WorstCaseMilp milp = build_worst_case_milp(t, g, econ, u, cat, scale);
    const mip::SolveOutcome mo = solver->solve(milp.model, opts.solver.options);
    if (!mo.optimal())
      throw std::runtime_error("worst_case: dual MILP not optimal (" + mip::to_string(mo.status) +
                               ")");
    WorstCaseResult res;
    res.realization = decode_flags(t, milp.flag_cols, mo.col_value, cat.num_tpg());
    res.milp_objective = mo.objective;

    const mip::LinearModel inner = instantiate(t, res.realization);
    const mip::SolveOutcome po = solver->solve(inner, opts.solver.options);
    if (!po.optimal())
      throw std::runtime_error("worst_case: primal re-solve not optimal (" +
                               mip::to_string(po.status) + ")");
    res.ope_cost = po.objective;
    res.schedule = extract_schedule(t.vars, cat, g, po.col_value);
    res.schedule.cost_ope = operation_cost(res.schedule, cat, econ, g);
    res.schedule.cost_slack =
        water_slack_penalty(cat, econ, g) * res.schedule.total_water_slack_t();

    // Strong duality must hold at the selected point; a gap means the dual
    // boxes clipped an optimal dual, so widen and retry.
    const double mismatch = std::abs(res.milp_objective - res.ope_cost);
    if (mismatch <= 1e-6 * std::max(1.0, std::abs(res.ope_cost))) return res;
    if (attempt >= 2)
      throw std::runtime_error(
          "worst_case: dual MILP and primal re-solve disagree by " + std::to_string(mismatch) +
          " after widening big-M twice; duals appear unbounded on a balance or cap row");
    scale *= 100.0;
  }
}

WorstCaseResult worst_case_enumerate(const DispatchTemplate& t, const DeviceCatalog& cat,
                                     const TimeGrid& g, const EconomicParams& econ,
                                     const UncertaintyConfig& u, const WorstCaseOptions& opts) {
  const std::vector<Realization> points = enumerate_realizations(
      g, u, cat.num_tpg(), UncertaintyRestriction::Both, opts.enumeration_cap);

  const std::int64_t n = static_cast<std::int64_t>(points.size());
  double best_cost = -mip::kInf;
  std::int64_t best_idx = -1;

  auto serial_scan = [&] {
    auto solver = opts.solver.make();
    for (std::int64_t i = 0; i < n; ++i) {
      const mip::SolveOutcome o =
          solver->solve(instantiate(t, points[static_cast<std::size_t>(i)]), opts.solver.options);
      if (!o.optimal())
        throw std::runtime_error("worst_case enumerate: inner LP not optimal at point " +
                                 std::to_string(i));
      if (o.objective > best_cost) {
        best_cost = o.objective;
        best_idx = i;
      }
    }
  };

  const int threads = std::max(1, opts.solver.threads);
  if (threads == 1) {
    serial_scan();  // reference path
  } else {
#ifdef _OPENMP
    bool failed = false;
#pragma omp parallel num_threads(threads)
    {
      auto solver = opts.solver.make();
      double local_best = -mip::kInf;
      std::int64_t local_idx = -1;
#pragma omp for schedule(dynamic, 8)
      for (std::int64_t i = 0; i < n; ++i) {
        const mip::SolveOutcome o = solver->solve(
            instantiate(t, points[static_cast<std::size_t>(i)]), opts.solver.options);
        if (!o.optimal()) {
#pragma omp critical
          failed = true;
          continue;
        }
        if (o.objective > local_best ||
            (o.objective == local_best && (local_idx < 0 || i < local_idx))) {
          local_best = o.objective;
          local_idx = i;
        }
      }
#pragma omp critical
      {
        // deterministic reduce: larger cost wins, ties to the lowest index
        if (local_idx >= 0 && (local_best > best_cost ||
                               (local_best == best_cost && local_idx < best_idx))) {
          best_cost = local_best;
          best_idx = local_idx;
        }
      }
    }
    if (failed) throw std::runtime_error("worst_case enumerate: an inner LP failed");
#else
    serial_scan();
#endif
  }

  if (best_idx < 0) throw std::logic_error("worst_case enumerate: no realizations visited");

  WorstCaseResult res;
  res.realization = points[static_cast<std::size_t>(best_idx)];
  res.evaluated = static_cast<std::uint64_t>(n);
  auto solver = opts.solver.make();
  const mip::SolveOutcome po =
      solver->solve(instantiate(t, res.realization), opts.solver.options);
  if (!po.optimal()) throw std::runtime_error("worst_case enumerate: winner re-solve failed");
  res.ope_cost = po.objective;
  res.schedule = extract_schedule(t.vars, cat, g, po.col_value);
  res.schedule.cost_ope = operation_cost(res.schedule, cat, econ, g);
  res.schedule.cost_slack =
      water_slack_penalty(cat, econ, g) * res.schedule.total_water_slack_t();
  return res;
}

}  // namespace

WorstCaseResult worst_case(const InvestmentPlan& plan, const DeviceCatalog& cat,
                           const ForecastSet& forecasts, const TimeGrid& grid,
                           const EconomicParams& econ, const UncertaintyConfig& uconfig,
                           const WorstCaseOptions& opts) {
  const DispatchTemplate t =
      make_dispatch_template(plan, cat, forecasts, grid, econ, uconfig, opts.model);
  switch (opts.method) {
    case WorstCaseMethod::DualMilp:
      return worst_case_dual(t, cat, grid, econ, uconfig, opts);
    case WorstCaseMethod::Enumerate:
      return worst_case_enumerate(t, cat, grid, econ, uconfig, opts);
  }
  throw std::logic_error("worst_case: unknown method");
}

}  // namespace om
