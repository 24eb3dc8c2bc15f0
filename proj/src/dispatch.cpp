#include "om/dispatch.hpp"

#include <cmath>
#include <stdexcept>

namespace om {

namespace {

std::string slot_name(int y, int d, int h) {
  return "y" + std::to_string(y) + "d" + std::to_string(d) + "h" + std::to_string(h);
}

}  // namespace

RealizedInputs nominal_inputs(const ForecastSet& f, const DeviceCatalog& cat, int delta_t,
                              const EconomicParams& econ, const ModelOptions& opt) {
  RealizedInputs in;
  in.load_mw = f.load_mw;
  in.tpg_cap_mw = nominal_tpg_profile(f, cat.tidal, delta_t, econ, opt.cap_tpg_at_rated);
  in.ndu_cap_mw.reserve(cat.renewable.size());
  for (std::size_t j = 0; j < cat.renewable.size(); ++j) {
    if (opt.ndu_availability_bound) {
      in.ndu_cap_mw.push_back(f.ndu_availability_mw.at(j));
    } else {
      Series3 cap(f.load_mw.hours(), f.load_mw.days(), f.load_mw.years());
      for (double& v : cap) v = cat.renewable[j].rated_power_mw;
      in.ndu_cap_mw.push_back(std::move(cap));
    }
  }
  return in;
}

RealizedInputs realized_inputs(const ForecastSet& f, const DeviceCatalog& cat,
                               const UncertaintyConfig& u, const Realization& r,
                               const EconomicParams& econ, const ModelOptions& opt) {
  RealizedInputs in = nominal_inputs(f, cat, u.delta_t, econ, opt);
  in.load_mw = realize_load(f.load_mw, u, r);
  in.tpg_cap_mw = realize_tpg(in.tpg_cap_mw, u, r);
  return in;
}

OperationVars add_operation_block(mip::LinearModel& m, const DeviceCatalog& cat,
                                  const TimeGrid& g, const EconomicParams& econ,
                                  const RealizedInputs& data, const XCols* x,
                                  const InvestmentPlan* fixed, bool water_slack,
                                  bool costs_in_objective, const std::string& tag) {
  if ((x == nullptr) == (fixed == nullptr))
    throw std::invalid_argument("add_operation_block: exactly one of x/fixed required");

  const int H = g.hours_per_day, D = g.days, Y = g.years;
  OperationVars v;
  v.slots = H * D * Y;
  const int nI = cat.num_du(), nJ = cat.num_ndu(), nK = cat.num_tpg(), nL = cat.num_ess();
  v.du.assign(nI, {});
  v.ndu.assign(nJ, {});
  v.tpg.assign(nK, {});
  v.ch.assign(nL, {});
  v.dch.assign(nL, {});
  v.soc.assign(nL, {});

  auto cost_of = [&](int col, double c, double weight) {
    if (c == 0.0) return;
    v.cost_terms.emplace_back(col, c * weight);
  };

  // columns, slot-major within each family
  for (int y = 0; y < Y; ++y)
    for (int d = 0; d < D; ++d)
      for (int h = 0; h < H; ++h) {
        const std::string s = slot_name(y, d, h);
        const double w = g.weight(d);
        for (int i = 0; i < nI; ++i) {
          const double cap = cat.dispatchable[i].rated_power_mw;
          const double ub = x ? cap : (fixed->du[i] ? cap : 0.0);
          const int col = m.add_col(tag + "Pdu" + std::to_string(i) + "_" + s, 0, ub, 0);
          v.du[i].push_back(col);
          cost_of(col, cat.dispatchable[i].op_cost_per_mwh, w);
        }
        for (int j = 0; j < nJ; ++j) {
          const double cap = data.ndu_cap_mw[j].at(y, d, h);
          const double ub = x ? cap : (fixed->ndu[j] ? cap : 0.0);
          const int col = m.add_col(tag + "Pndu" + std::to_string(j) + "_" + s, 0, ub, 0);
          v.ndu[j].push_back(col);
        }
        for (int k = 0; k < nK; ++k) {
          const double cap = data.tpg_cap_mw[k].at(y, d, h);
          const double ub = x ? cap : (fixed->tpg[k] ? cap : 0.0);
          const int col = m.add_col(tag + "Ptpg" + std::to_string(k) + "_" + s, 0, ub, 0);
          v.tpg[k].push_back(col);
          cost_of(col, cat.tidal[k].op_cost_per_mwh, w);
        }
        for (int l = 0; l < nL; ++l) {
          const double pcap = cat.storage[l].rated_power_mw;
          const double ecap = cat.storage[l].rated_energy_mwh;
          const double pub = x ? pcap : (fixed->ess[l] ? pcap : 0.0);
          const double eub = x ? ecap : (fixed->ess[l] ? ecap : 0.0);
          v.ch[l].push_back(m.add_col(tag + "ch" + std::to_string(l) + "_" + s, 0, pub, 0));
          v.dch[l].push_back(m.add_col(tag + "dch" + std::to_string(l) + "_" + s, 0, pub, 0));
          v.soc[l].push_back(m.add_col(tag + "soc" + std::to_string(l) + "_" + s, 0, eub, 0));
        }
        const int fcol =
            m.add_col(tag + "F_" + s, 0, cat.desalination.rated_capacity_tph, 0);
        v.water.push_back(fcol);
        cost_of(fcol, cat.desalination.op_cost_per_ton, w);
        const int lscol = m.add_col(tag + "LS_" + s, 0, data.load_mw.at(y, d, h), 0);
        v.shed.push_back(lscol);
        cost_of(lscol, econ.shed_penalty, w);
      }

  if (water_slack) {
    const double pen = water_slack_penalty(cat, econ, g);
    for (int y = 0; y < Y; ++y)
      for (int d = 0; d < D; ++d) {
        const int col = m.add_col(tag + "W_y" + std::to_string(y) + "d" + std::to_string(d), 0,
                                  mip::kInf, 0);
        v.slack.push_back(col);
        cost_of(col, pen, 1.0);
      }
  }

  if (costs_in_objective)
    for (const auto& [col, c] : v.cost_terms) m.set_col_cost(col, c);

  // capacity-link rows when x is variable
  auto link = [&](int col, int xcol, double cap, const std::string& name) {
    const std::pair<int, double> e[] = {{col, 1.0}, {xcol, -cap}};
    m.add_row(name, mip::RowSense::LE, 0.0, e);
  };
  if (x) {
    for (int y = 0; y < Y; ++y)
      for (int d = 0; d < D; ++d)
        for (int h = 0; h < H; ++h) {
          const int s = v.slot(g, y, d, h);
          const std::string sn = slot_name(y, d, h);
          for (int i = 0; i < nI; ++i)
            link(v.du[i][s], x->du[i], cat.dispatchable[i].rated_power_mw,
                 tag + "cap_du" + std::to_string(i) + "_" + sn);
          for (int j = 0; j < nJ; ++j)
            link(v.ndu[j][s], x->ndu[j], data.ndu_cap_mw[j].at(y, d, h),
                 tag + "cap_ndu" + std::to_string(j) + "_" + sn);
          for (int k = 0; k < nK; ++k)
            link(v.tpg[k][s], x->tpg[k], data.tpg_cap_mw[k].at(y, d, h),
                 tag + "cap_tpg" + std::to_string(k) + "_" + sn);
          for (int l = 0; l < nL; ++l) {
            link(v.ch[l][s], x->ess[l], cat.storage[l].rated_power_mw,
                 tag + "cap_ch" + std::to_string(l) + "_" + sn);
            link(v.dch[l][s], x->ess[l], cat.storage[l].rated_power_mw,
                 tag + "cap_dch" + std::to_string(l) + "_" + sn);
            link(v.soc[l][s], x->ess[l], cat.storage[l].rated_energy_mwh,
                 tag + "cap_soc" + std::to_string(l) + "_" + sn);
          }
        }
  }

  // storage dynamics with the cyclic wrap: soc at the start of hour h+1
  // equals soc at the start of hour h plus the net charge of hour h; hour
  // H-1 wraps onto hour 0 of the same day.
  for (int y = 0; y < Y; ++y)
    for (int d = 0; d < D; ++d)
      for (int h = 0; h < H; ++h)
        for (int l = 0; l < nL; ++l) {
          const int s = v.slot(g, y, d, h);
          const int snext = v.slot(g, y, d, (h + 1) % H);
          const double eta = cat.storage[l].efficiency;
          const std::pair<int, double> e[] = {{v.soc[l][snext], 1.0},
                                              {v.soc[l][s], -1.0},
                                              {v.ch[l][s], -eta},
                                              {v.dch[l][s], 1.0 / eta}};
          m.add_row(tag + "soc" + std::to_string(l) + "_" + slot_name(y, d, h),
                    mip::RowSense::EQ, 0.0, e);
        }

  // hourly power balance: generation + net discharge + shed = load + SDU draw
  for (int y = 0; y < Y; ++y)
    for (int d = 0; d < D; ++d)
      for (int h = 0; h < H; ++h) {
        const int s = v.slot(g, y, d, h);
        std::vector<std::pair<int, double>> e;
        for (int i = 0; i < nI; ++i) e.emplace_back(v.du[i][s], 1.0);
        for (int j = 0; j < nJ; ++j) e.emplace_back(v.ndu[j][s], 1.0);
        for (int k = 0; k < nK; ++k) e.emplace_back(v.tpg[k][s], 1.0);
        for (int l = 0; l < nL; ++l) {
          e.emplace_back(v.dch[l][s], 1.0);
          e.emplace_back(v.ch[l][s], -1.0);
        }
        e.emplace_back(v.shed[s], 1.0);
        e.emplace_back(v.water[s], -cat.desalination.power_per_ton_mw);
        v.balance_rows.push_back(m.add_row(tag + "bal_" + slot_name(y, d, h), mip::RowSense::EQ,
                                           data.load_mw.at(y, d, h), e));
      }

  // daily water demand
  for (int y = 0; y < Y; ++y)
    for (int d = 0; d < D; ++d) {
      std::vector<std::pair<int, double>> e;
      for (int h = 0; h < H; ++h) e.emplace_back(v.water[v.slot(g, y, d, h)], 1.0);
      if (water_slack) e.emplace_back(v.slack[y * D + d], 1.0);
      m.add_row(tag + "water_y" + std::to_string(y) + "d" + std::to_string(d), mip::RowSense::GE,
                cat.desalination.daily_demand_t, e);
    }

  return v;
}

std::vector<double> DispatchTemplate::flag_values(const Realization& r) const {
  std::vector<double> u(static_cast<std::size_t>(u_total()), 0.0);
  const TimeGrid& g = grid;
  for (int y = 0; y < g.years; ++y)
    for (int d = 0; d < g.days; ++d)
      for (int h = 0; h < g.hours_per_day; ++h) {
        const int s = vars.slot(g, y, d, h);
        if (r.load_up.at(y, d, h)) u[static_cast<std::size_t>(u_load_up(s))] = 1.0;
        if (r.load_down.at(y, d, h)) u[static_cast<std::size_t>(u_load_down(s))] = 1.0;
        for (int k = 0; k < num_tpg_units; ++k) {
          if (r.tpg_up[k].at(y, d, h)) u[static_cast<std::size_t>(u_tpg_up(k, s))] = 1.0;
          if (r.tpg_down[k].at(y, d, h)) u[static_cast<std::size_t>(u_tpg_down(k, s))] = 1.0;
        }
      }
  return u;
}

DispatchTemplate make_dispatch_template(const InvestmentPlan& plan, const DeviceCatalog& cat,
                                        const ForecastSet& forecasts, const TimeGrid& g,
                                        const EconomicParams& econ, const UncertaintyConfig& u,
                                        const ModelOptions& opt) {
  if (!plan.covers(cat))
    throw std::invalid_argument("make_dispatch_template: plan does not cover catalog");
  DispatchTemplate t;
  t.grid = g;
  t.plan = plan;
  t.beta_load = u.beta_load;
  t.beta_tpg = u.beta_tpg;
  t.num_tpg_units = cat.num_tpg();

  const RealizedInputs nominal = nominal_inputs(forecasts, cat, u.delta_t, econ, opt);
  t.vars = add_operation_block(t.model, cat, g, econ, nominal, nullptr, &plan,
                               /*water_slack=*/true, /*costs_in_objective=*/true, "");

  t.row_rhs_terms.assign(static_cast<std::size_t>(t.model.num_rows()), {});
  t.col_ub_terms.assign(static_cast<std::size_t>(t.model.num_cols()), {});

  for (int y = 0; y < g.years; ++y)
    for (int d = 0; d < g.days; ++d)
      for (int h = 0; h < g.hours_per_day; ++h) {
        const int s = t.vars.slot(g, y, d, h);
        const double dev_load = u.beta_load * nominal.load_mw.at(y, d, h);
        if (dev_load != 0.0) {
          const int row = t.vars.balance_rows[s];
          t.row_rhs_terms[static_cast<std::size_t>(row)] = {{t.u_load_up(s), dev_load},
                                                            {t.u_load_down(s), -dev_load}};
          const int ls = t.vars.shed[s];
          t.col_ub_terms[static_cast<std::size_t>(ls)] = {{t.u_load_up(s), dev_load},
                                                          {t.u_load_down(s), -dev_load}};
        }
        for (int k = 0; k < t.num_tpg_units; ++k) {
          if (!plan.tpg[k]) continue;
          const double dev = u.beta_tpg * nominal.tpg_cap_mw[k].at(y, d, h);
          if (dev == 0.0) continue;
          const int col = t.vars.tpg[k][s];
          t.col_ub_terms[static_cast<std::size_t>(col)] = {{t.u_tpg_up(k, s), dev},
                                                           {t.u_tpg_down(k, s), -dev}};
        }
      }
  return t;
}

mip::LinearModel instantiate(const DispatchTemplate& t, const Realization& r) {
  mip::LinearModel m = t.model;
  const std::vector<double> u = t.flag_values(r);
  for (int row = 0; row < m.num_rows(); ++row) {
    const auto& terms = t.row_rhs_terms[static_cast<std::size_t>(row)];
    if (terms.empty()) continue;
    double rhs = t.model.row_rhs(row);
    for (const auto& [ui, coef] : terms) rhs += coef * u[static_cast<std::size_t>(ui)];
    m.set_row_rhs(row, rhs);
  }
  for (int col = 0; col < m.num_cols(); ++col) {
    const auto& terms = t.col_ub_terms[static_cast<std::size_t>(col)];
    if (terms.empty()) continue;
    double ub = t.model.col_upper(col);
    for (const auto& [ui, coef] : terms) ub += coef * u[static_cast<std::size_t>(ui)];
    m.set_col_bounds(col, m.col_lower(col), std::max(ub, 0.0));
  }
  return m;
}

OperationSchedule extract_schedule(const OperationVars& v, const DeviceCatalog& cat,
                                   const TimeGrid& g, const std::vector<double>& col) {
  OperationSchedule s = OperationSchedule::zeros(cat, g);
  auto val = [&](int c) { return col.at(static_cast<std::size_t>(c)); };
  for (int y = 0; y < g.years; ++y)
    for (int d = 0; d < g.days; ++d)
      for (int h = 0; h < g.hours_per_day; ++h) {
        const int slot = v.slot(g, y, d, h);
        for (int i = 0; i < cat.num_du(); ++i) s.du_gen_mw[i].at(y, d, h) = val(v.du[i][slot]);
        for (int j = 0; j < cat.num_ndu(); ++j) s.ndu_gen_mw[j].at(y, d, h) = val(v.ndu[j][slot]);
        for (int k = 0; k < cat.num_tpg(); ++k) s.tpg_gen_mw[k].at(y, d, h) = val(v.tpg[k][slot]);
        for (int l = 0; l < cat.num_ess(); ++l) {
          s.ess_charge_mw[l].at(y, d, h) = val(v.ch[l][slot]);
          s.ess_discharge_mw[l].at(y, d, h) = val(v.dch[l][slot]);
          s.ess_soc_mwh[l].at(y, d, h) = val(v.soc[l][slot]);
        }
        s.water_t.at(y, d, h) = val(v.water[slot]);
        s.shed_mw.at(y, d, h) = val(v.shed[slot]);
      }
  for (std::size_t i = 0; i < v.slack.size(); ++i) s.water_slack_t[i] = val(v.slack[i]);
  return s;
}

DispatchResult dispatch(const InvestmentPlan& plan, const Realization& realization,
                        const DeviceCatalog& cat, const ForecastSet& forecasts, const TimeGrid& g,
                        const EconomicParams& econ, const UncertaintyConfig& u,
                        mip::Solver& solver, const mip::SolveOptions& sopt,
                        const ModelOptions& mopt) {
  if (auto errs = realization.validate(g, u); !errs.empty())
    throw std::invalid_argument("dispatch: " + errs.front());
  const DispatchTemplate t = make_dispatch_template(plan, cat, forecasts, g, econ, u, mopt);
  const mip::LinearModel lp = instantiate(t, realization);
  DispatchResult res;
  res.outcome = solver.solve(lp, sopt);
  if (!res.outcome.optimal())
    throw std::runtime_error("dispatch: inner problem not optimal (" +
                             mip::to_string(res.outcome.status) + "); with the water slack this "
                             "should be impossible - check inputs");
  res.objective = res.outcome.objective;
  res.schedule = extract_schedule(t.vars, cat, g, res.outcome.col_value);
  res.schedule.cost_ope = operation_cost(res.schedule, cat, econ, g);
  res.schedule.cost_slack =
      water_slack_penalty(cat, econ, g) * res.schedule.total_water_slack_t();
  return res;
}

}  // namespace om
