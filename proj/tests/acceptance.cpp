// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria run against the randomized toy set (exhaustively
// checkable) and the reference fixture (full device catalog, synthetic tide
// and load profiles).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "om/ccg.hpp"
#include "om/evaluator.hpp"
#include "om/fixture.hpp"
#include "om/tidal.hpp"
#include "om/verify.hpp"
#include "toys.hpp"

using namespace om;
using om::testing::Toy;

namespace {

struct Criterion {
  int id;
  std::string name;
  bool pass = true;
  std::string note;
};

std::vector<Criterion> results;

Criterion& criterion(int id, const std::string& name) {
  results.push_back({id, name});
  return results.back();
}

void fail(Criterion& c, const std::string& why) {
  c.pass = false;
  if (!c.note.empty()) c.note += "; ";
  c.note += why;
}

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

struct CcgRecord {
  std::string instance;
  CcgState state;
};
std::vector<CcgRecord> ccg_records;

struct ScheduleRecord {
  std::string instance;
  InvestmentPlan plan;
  OperationSchedule schedule;
  RealizedInputs inputs;
  DeviceCatalog cat;
  TimeGrid grid;
};
std::vector<ScheduleRecord> schedule_records;

CcgResult run_ccg(const std::string& tag, const Toy& t, const CcgOptions& opts) {
  const CcgResult r = ccg_solve(t.cat, t.forecasts, t.grid, t.econ, t.uncertainty, opts);
  ccg_records.push_back({tag, r.state});
  schedule_records.push_back({tag + "/worst",
                              r.plan,
                              r.worst_schedule,
                              realized_inputs(t.forecasts, t.cat, t.uncertainty,
                                              r.worst_realization, t.econ, opts.model),
                              t.cat,
                              t.grid});
  return r;
}

// brute force over every investment plan x enumerated realization
double exhaustive_robust_total(const Toy& t) {
  const int nI = t.cat.num_du(), nJ = t.cat.num_ndu(), nK = t.cat.num_tpg(),
            nL = t.cat.num_ess();
  const int n = nI + nJ + nK + nL;
  const double lmax = t.forecasts.max_load();
  double best = mip::kInf;
  WorstCaseOptions wopts;
  wopts.method = WorstCaseMethod::Enumerate;
  for (int bits = 0; bits < (1 << n); ++bits) {
    InvestmentPlan p = InvestmentPlan::none(t.cat);
    int b = 0;
    for (int i = 0; i < nI; ++i) p.du[i] = (bits >> b++) & 1;
    for (int j = 0; j < nJ; ++j) p.ndu[j] = (bits >> b++) & 1;
    for (int k = 0; k < nK; ++k) p.tpg[k] = (bits >> b++) & 1;
    for (int l = 0; l < nL; ++l) p.ess[l] = (bits >> b++) & 1;
    if (p.adequacy_capacity_mw(t.cat) < lmax - 1e-9) continue;
    const auto wc =
        worst_case(p, t.cat, t.forecasts, t.grid, t.econ, t.uncertainty, wopts);
    best = std::min(best, investment_cost(t.cat, p, t.grid, t.econ) + wc.ope_cost);
  }
  return best;
}

Toy fixture_toy(double beta, double gamma) {
  Toy t;
  t.cat = fixture::reference_catalog();
  t.grid = fixture::reference_grid();
  t.econ = fixture::reference_economics();
  t.forecasts = fixture::reference_forecasts(t.grid, t.cat);
  t.uncertainty.beta_load = beta;
  t.uncertainty.beta_tpg = beta;
  t.uncertainty.gamma_load = {gamma};
  t.uncertainty.gamma_tpg = {gamma};
  return t;
}

}  // namespace

int main() {
  const auto toys = om::testing::acceptance_toys();
  std::printf("acceptance: %zu toy instances + reference fixture\n", toys.size());

  // ---- criterion 1: dual reformulation equals enumeration ----------------
  {
    auto& c = criterion(1, "worst_case dual_milp == enumerate on toys, suite < 5 min");
    const double t0 = now_seconds();
    auto solver = mip::make_solver("highs");
    int checked = 0;
    for (std::size_t i = 0; i < toys.size(); ++i) {
      const Toy& t = toys[i];
      const auto plan_res = solve_dpm(t.cat, t.forecasts, t.grid, t.econ, 0, *solver);
      schedule_records.push_back({"toy" + std::to_string(i) + "/dpm", plan_res.plan,
                                  plan_res.schedule,
                                  nominal_inputs(t.forecasts, t.cat, 0, t.econ), t.cat, t.grid});
      WorstCaseOptions dualo, enumo;
      dualo.method = WorstCaseMethod::DualMilp;
      enumo.method = WorstCaseMethod::Enumerate;
      enumo.solver.threads = 2;
      const auto dual =
          worst_case(plan_res.plan, t.cat, t.forecasts, t.grid, t.econ, t.uncertainty, dualo);
      const auto enumd =
          worst_case(plan_res.plan, t.cat, t.forecasts, t.grid, t.econ, t.uncertainty, enumo);
      schedule_records.push_back(
          {"toy" + std::to_string(i) + "/worst", plan_res.plan, dual.schedule,
           realized_inputs(t.forecasts, t.cat, t.uncertainty, dual.realization, t.econ), t.cat,
           t.grid});
      if (!close_rel(dual.ope_cost, enumd.ope_cost, 1e-6))
        fail(c, "toy " + std::to_string(i) + ": dual " + std::to_string(dual.ope_cost) +
                    " vs enum " + std::to_string(enumd.ope_cost));
      ++checked;
    }
    const double dt = now_seconds() - t0;
    if (checked < 20) fail(c, "only " + std::to_string(checked) + " toys");
    if (dt > 300.0) fail(c, "suite took " + std::to_string(dt) + " s");
    c.note += (c.note.empty() ? "" : "; ") + std::to_string(checked) + " toys in " +
              std::to_string(dt) + " s";
  }

  // ---- criterion 2: ccg equals exhaustive search --------------------------
  {
    auto& c = criterion(2, "ccg_solve total == exhaustive plan x realization search");
    CcgOptions opts;
    opts.eps = 1e-9;
    for (std::size_t i = 0; i < toys.size(); ++i) {
      const Toy& t = toys[i];
      const auto r = run_ccg("toy" + std::to_string(i), t, opts);
      const double brute = exhaustive_robust_total(t);
      if (!close_rel(r.total, brute, 1e-6))
        fail(c, "toy " + std::to_string(i) + ": ccg " + std::to_string(r.total) + " vs brute " +
                    std::to_string(brute));
    }
  }

  // ---- criterion 3: zero budgets degenerate to the DPM --------------------
  {
    auto& c = criterion(3, "gamma = 0 makes RPM equal DPM");
    auto solver = mip::make_solver("highs");
    for (std::size_t i = 0; i < toys.size(); ++i) {
      Toy t = toys[i];
      t.uncertainty.gamma_load = {0.0};
      t.uncertainty.gamma_tpg = {0.0};
      const auto d = solve_dpm(t.cat, t.forecasts, t.grid, t.econ, 0, *solver);
      const auto r = run_ccg("toy" + std::to_string(i) + "/g0", t, {});
      if (std::abs(r.total - d.total) > 1e-6 * std::max(1.0, std::abs(d.total)))
        fail(c, "toy " + std::to_string(i) + ": rpm " + std::to_string(r.total) + " vs dpm " +
                    std::to_string(d.total));
    }
    // and on the fixture
    Toy t = fixture_toy(0.5, 0.0);
    const auto d = solve_dpm(t.cat, t.forecasts, t.grid, t.econ, 0, *solver);
    schedule_records.push_back({"fixture/dpm", d.plan, d.schedule,
                                nominal_inputs(t.forecasts, t.cat, 0, t.econ), t.cat, t.grid});
    const auto r = run_ccg("fixture/g0", t, {});
    if (std::abs(r.total - d.total) > 1e-6 * std::max(1.0, std::abs(d.total)))
      fail(c, "fixture: rpm " + std::to_string(r.total) + " vs dpm " + std::to_string(d.total));
  }

  // ---- criterion 4 prerequisite: the fixture grid of robust solves --------
  const std::vector<double> gammas{0.0, 0.25, 0.5};
  const std::vector<double> betas{0.0, 0.25, 0.5};
  double fixture_total[3][3];
  CcgResult fixture_bb;  // beta = gamma = 0.5 cell, reused below
  {
    auto& c = criterion(4, "fixture robust cost nondecreasing in gamma and in beta");
    for (std::size_t bi = 0; bi < betas.size(); ++bi)
      for (std::size_t gi = 0; gi < gammas.size(); ++gi) {
        Toy t = fixture_toy(betas[bi], gammas[gi]);
        const auto r = run_ccg("fixture/b" + std::to_string(bi) + "g" + std::to_string(gi), t,
                               {});
        fixture_total[bi][gi] = r.total;
        if (bi == 2 && gi == 2) fixture_bb = r;
      }
    for (std::size_t bi = 0; bi < betas.size(); ++bi)
      for (std::size_t gi = 0; gi + 1 < gammas.size(); ++gi)
        if (fixture_total[bi][gi] > fixture_total[bi][gi + 1] + 1e-6)
          fail(c, "beta=" + std::to_string(betas[bi]) + ": cost drops from gamma=" +
                      std::to_string(gammas[gi]) + " to " + std::to_string(gammas[gi + 1]));
    for (std::size_t gi = 0; gi < gammas.size(); ++gi)
      for (std::size_t bi = 0; bi + 1 < betas.size(); ++bi)
        if (fixture_total[bi][gi] > fixture_total[bi + 1][gi] + 1e-6)
          fail(c, "gamma=" + std::to_string(gammas[gi]) + ": cost drops from beta=" +
                      std::to_string(betas[bi]) + " to " + std::to_string(betas[bi + 1]));
  }

  // ---- criterion 5: DPM plan sheds under the robust worst case ------------
  InvestmentPlan fixture_dpm_plan;
  {
    auto& c = criterion(5, "DPM plan sheds under the worst case, RPM plan does not");
    Toy t = fixture_toy(0.5, 0.5);
    auto solver = mip::make_solver("highs");
    const auto d = solve_dpm(t.cat, t.forecasts, t.grid, t.econ, 0, *solver);
    fixture_dpm_plan = d.plan;
    const double dpm_shed =
        shed_under_worst(d.plan, t.cat, t.forecasts, t.grid, t.econ, t.uncertainty);
    const double rpm_shed =
        shed_under_worst(fixture_bb.plan, t.cat, t.forecasts, t.grid, t.econ, t.uncertainty);
    if (dpm_shed <= 1e-6) fail(c, "DPM plan shows no shedding (" + std::to_string(dpm_shed) + ")");
    if (rpm_shed > 1e-6) fail(c, "RPM plan sheds " + std::to_string(rpm_shed) + " MW");
    const double dpm_du = d.plan.installed_du_mw(t.cat);
    const double rpm_du = fixture_bb.plan.installed_du_mw(t.cat);
    if (rpm_du < dpm_du - 1e-9)
      fail(c, "RPM DU capacity " + std::to_string(rpm_du) + " < DPM " + std::to_string(dpm_du));
    c.note += (c.note.empty() ? "" : "; ") + ("DPM shed " + std::to_string(dpm_shed) +
                                              " MW, DU " + std::to_string(dpm_du) + " -> " +
                                              std::to_string(rpm_du) + " MW");
  }

  // ---- criterion 6: shedding of the fixed DPM plan grows with beta --------
  {
    auto& c = criterion(6, "fixed DPM plan: shedding nondecreasing over beta");
    double prev = -1.0;
    for (double beta : {0.25, 0.5, 0.75, 1.0}) {
      Toy t = fixture_toy(beta, 0.5);
      const double shed =
          shed_under_worst(fixture_dpm_plan, t.cat, t.forecasts, t.grid, t.econ, t.uncertainty);
      if (shed < prev - 1e-6)
        fail(c, "shed drops to " + std::to_string(shed) + " at beta=" + std::to_string(beta));
      prev = shed;
    }
  }

  // ---- criterion 7: every collected schedule passes the audit -------------
  {
    auto& c = criterion(7, "all schedules returned by any path verify at 1e-6");
    int audited = 0;
    for (const auto& rec : schedule_records) {
      const auto report =
          verify_schedule(rec.plan, rec.schedule, rec.inputs, rec.cat, rec.grid, 1e-6);
      if (!report.empty())
        fail(c, rec.instance + ": " + report.front().to_string() + " (+" +
                    std::to_string(report.size() - 1) + " more)");
      ++audited;
    }
    c.note += (c.note.empty() ? "" : "; ") + std::to_string(audited) + " schedules";
  }

  // ---- criterion 8: tidal physics ----------------------------------------
  {
    auto& c = criterion(8, "tidal power formula, quadratic scaling, delay semantics");
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> uh(0.0, 6.0), ua(1e2, 5e5), ue(0.05, 1.0);
    const EconomicParams econ = fixture::reference_economics();
    for (int i = 0; i < 100; ++i) {
      const double h = uh(rng), area = ua(rng), eta = ue(rng);
      const TidalUnit u{"t", 1e12, 1.0, area, eta, 0.0};
      const double expect =
          0.5 * econ.sea_density * econ.gravity * h * h * area * eta / 3600.0 / 1e6;
      if (!close_rel(tidal_power(h, u, econ), expect, 1e-12)) {
        fail(c, "formula mismatch at sample " + std::to_string(i));
        break;
      }
      if (2.0 * h <= 6.0) {
        const double p1 = tidal_power(h, u, econ), p4 = tidal_power(2.0 * h, u, econ);
        if (std::abs(p4 - 4.0 * p1) > 1e-12 * std::max(1.0, p4)) {
          fail(c, "quadratic scaling fails at sample " + std::to_string(i));
          break;
        }
      }
    }
    TimeGrid g{24, 2, 1, {}};
    Series3 s(g);
    std::uniform_real_distribution<double> uv(0.5, 3.5);
    for (auto& v : s) v = uv(rng);
    if (!(apply_delay(s, 0) == s)) fail(c, "delay 0 is not the identity");
    for (int dt = -4; dt <= 4; ++dt) {
      const auto out = apply_delay(s, dt);
      for (int d = 0; d < g.days; ++d) {
        int zeros = 0;
        for (int h = 0; h < 24; ++h)
          if (out.at(0, d, h) == 0.0) ++zeros;
        if (zeros != std::abs(dt))
          fail(c, "delay " + std::to_string(dt) + " zero-fills " + std::to_string(zeros) +
                      " slots");
      }
    }
  }

  // ---- criterion 9: convergence mechanics over every ccg run --------------
  {
    auto& c = criterion(9, "bounds monotone, final gap <= 1e-4, iterations <= 50");
    int runs = 0;
    for (const auto& rec : ccg_records) {
      ++runs;
      double prev_lb = -mip::kInf, prev_ub = mip::kInf;
      for (const auto& it : rec.state.trace) {
        const double scale = std::max(1.0, std::abs(it.ub));
        if (it.lb < prev_lb - 1e-6 * scale)
          fail(c, rec.instance + ": LB decreases at iteration " + std::to_string(it.iter));
        if (it.ub > prev_ub + 1e-6 * scale)
          fail(c, rec.instance + ": UB increases at iteration " + std::to_string(it.iter));
        prev_lb = it.lb;
        prev_ub = it.ub;
      }
      if (rec.state.gap > 1e-4)
        fail(c, rec.instance + ": final gap " + std::to_string(rec.state.gap));
      if (rec.state.iterations > 50)
        fail(c, rec.instance + ": " + std::to_string(rec.state.iterations) + " iterations");
    }
    c.note += (c.note.empty() ? "" : "; ") + std::to_string(runs) + " ccg runs";
  }

  // ---- report --------------------------------------------------------------
  int failures = 0;
  for (const auto& c : results) {
    std::printf("[%s] criterion %d: %s%s%s\n", c.pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                c.note.empty() ? "" : " -- ", c.note.c_str());
    if (!c.pass) ++failures;
  }
  if (failures > 0) std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  else std::printf("acceptance: all %zu criteria passed\n", results.size());
  return failures == 0 ? 0 : 1;
}
