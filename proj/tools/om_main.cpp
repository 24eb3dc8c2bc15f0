// Batch planning studies for islanded microgrids: deterministic planning,
// two-stage robust planning via column-and-constraint generation, fixed-plan
// evaluation under worst-case uncertainty, and parameter sweeps.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "om/fixture.hpp"
#include "om/io.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct CommonArgs {
  std::string config;
  std::string out = "results";
  std::string backend;  // highest precedence; OM_SOLVER is the fallback
  std::string method;
  double eps = -1;
  int max_iter = -1;
  int seed = -1;
  int threads = -1;
  double time_limit = -1;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool needs_config = true) {
  auto* opt = cmd->add_option("--config", a.config, "run configuration JSON");
  if (needs_config) opt->required();
  cmd->add_option("--out", a.out, "output directory");
  cmd->add_option("--backend", a.backend, "MILP backend (default: config, then $OM_SOLVER)");
  cmd->add_option("--eps", a.eps, "C&CG convergence gap");
  cmd->add_option("--max-iter", a.max_iter, "C&CG iteration limit");
  cmd->add_option("--seed", a.seed, "solver random seed");
  cmd->add_option("--threads", a.threads, "worker threads for enumeration and sweeps");
  cmd->add_option("--time-limit", a.time_limit, "per-solve time limit in seconds");
}

om::io::RunConfig load_and_override(const CommonArgs& a) {
  om::io::RunConfig rc = om::io::load_run_config(a.config);
  if (!a.backend.empty()) {
    rc.solver.backend = a.backend;
  } else if (rc.solver.backend.empty()) {
    const char* env = std::getenv("OM_SOLVER");
    rc.solver.backend = env && *env ? env : "highs";
  }
  if (a.seed >= 0) rc.solver.options.seed = a.seed;
  if (a.threads > 0) rc.solver.threads = a.threads;
  if (a.time_limit > 0) rc.solver.options.time_limit_sec = a.time_limit;
  if (a.eps > 0) rc.ccg.eps = a.eps;
  if (a.max_iter > 0) rc.ccg.max_iter = a.max_iter;
  if (!a.method.empty()) rc.ccg.method = om::parse_worst_case_method(a.method);
  rc.ccg.solver = rc.solver;
  rc.ccg.model = rc.model;
  return rc;
}

om::WorstCaseOptions worst_case_options(const om::io::RunConfig& rc) {
  om::WorstCaseOptions w;
  w.method = rc.ccg.method;
  w.solver = rc.solver;
  w.model = rc.model;
  w.enumeration_cap = rc.ccg.enumeration_cap;
  return w;
}

double run_dpm(const om::io::RunConfig& rc, const fs::path& out) {
  auto solver = rc.solver.make();
  const om::PlanResult r =
      om::solve_dpm(rc.catalog, rc.forecasts, rc.grid, rc.econ, rc.uncertainty.delta_t, *solver,
                    rc.solver.options, rc.model);
  om::io::write_plan_json(out / "plan.json", rc.catalog, r.plan);
  om::io::write_schedule_csv(out / "schedule.csv", rc.grid, rc.catalog, r.schedule,
                             rc.forecasts.load_mw);
  om::io::CostSummary costs;
  costs.investment = r.cost_inv;
  costs.operation = r.cost_ope;
  costs.total = r.total;
  om::io::write_costs_json(out / "costs.json", costs);
  return r.total;
}

double run_rpm(const om::io::RunConfig& rc, const fs::path& out) {
  const om::CcgResult r =
      om::ccg_solve(rc.catalog, rc.forecasts, rc.grid, rc.econ, rc.uncertainty, rc.ccg);
  om::io::write_plan_json(out / "plan.json", rc.catalog, r.plan);
  const om::Series3 worst_load =
      om::realize_load(rc.forecasts.load_mw, rc.uncertainty, r.worst_realization);
  om::io::write_schedule_csv(out / "schedule.csv", rc.grid, rc.catalog, r.worst_schedule,
                             worst_load);
  om::io::write_realization_json(out / "realization.json", rc.grid, rc.catalog,
                                 r.worst_realization);
  om::io::write_trace_csv(out / "trace.csv", r.state.trace);
  om::io::CostSummary costs;
  costs.investment = r.cost_inv;
  costs.operation = r.worst_schedule.cost_ope;
  costs.slack_penalty = r.worst_schedule.cost_slack;
  costs.total = r.total;
  costs.robust = true;
  costs.lb = r.state.lb;
  costs.ub = r.state.ub;
  costs.gap = r.state.gap;
  costs.iterations = r.state.iterations;
  costs.status = om::to_string(r.state.status);
  om::io::write_costs_json(out / "costs.json", costs);
  if (r.worst_schedule.total_water_slack_t() > 1e-6)
    std::fprintf(stderr,
                 "warning: worst-case dispatch leaves %.6g t of water demand unmet; the "
                 "candidate pool cannot cover this uncertainty set\n",
                 r.worst_schedule.total_water_slack_t());
  return r.total;
}

double run_evaluate(const om::io::RunConfig& rc, const fs::path& out, const std::string& plan_file) {
  const om::InvestmentPlan plan = om::io::read_plan_json(plan_file, rc.catalog);
  const om::WorstCaseResult r = om::worst_case(plan, rc.catalog, rc.forecasts, rc.grid, rc.econ,
                                               rc.uncertainty, worst_case_options(rc));
  om::io::write_plan_json(out / "plan.json", rc.catalog, plan);
  const om::Series3 worst_load =
      om::realize_load(rc.forecasts.load_mw, rc.uncertainty, r.realization);
  om::io::write_schedule_csv(out / "schedule.csv", rc.grid, rc.catalog, r.schedule, worst_load);
  om::io::write_realization_json(out / "realization.json", rc.grid, rc.catalog, r.realization);
  om::io::CostSummary costs;
  costs.investment = om::investment_cost(rc.catalog, plan, rc.grid, rc.econ);
  costs.operation = r.schedule.cost_ope;
  costs.slack_penalty = r.schedule.cost_slack;
  costs.total = costs.investment + r.ope_cost;
  costs.with_shed = true;
  costs.total_shed_mw = r.schedule.total_shed_mw();
  costs.water_slack_t = r.schedule.total_water_slack_t();
  om::io::write_costs_json(out / "costs.json", costs);
  return costs.total;
}

void run_sweep(const om::io::RunConfig& rc, const fs::path& out,
               const std::vector<std::string>& axis_args, const std::string& job,
               const std::string& plan_file, int threads) {
  om::SweepSpec spec;
  spec.job = om::parse_sweep_job(job);
  spec.threads = std::max(1, threads);
  for (const auto& arg : axis_args) {
    const auto eq = arg.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("axis '" + arg + "' must look like name=v1,v2,...");
    om::SweepAxis axis;
    axis.param = arg.substr(0, eq);
    std::string rest = arg.substr(eq + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      const auto comma = rest.find(',', pos);
      const std::string tok = rest.substr(pos, comma == std::string::npos ? comma : comma - pos);
      if (tok.empty()) throw std::invalid_argument("axis '" + arg + "' has an empty value");
      axis.values.push_back(std::stod(tok));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    spec.axes.push_back(std::move(axis));
  }
  if (!plan_file.empty()) spec.plan = om::io::read_plan_json(plan_file, rc.catalog);
  const om::SweepResult table =
      om::sweep(spec, rc.catalog, rc.forecasts, rc.grid, rc.econ, rc.uncertainty, rc.ccg);
  om::io::write_sweep_csv(out / "sweep.csv", table);
  int failed = 0;
  for (const auto& cell : table.cells)
    if (!cell.ok) ++failed;
  if (failed > 0)
    std::fprintf(stderr, "warning: %d of %zu sweep cells failed; see sweep.csv\n", failed,
                 table.cells.size());
}

void make_fixture(const fs::path& out) {
  fs::create_directories(out);
  const auto cat = om::fixture::reference_catalog();
  const auto grid = om::fixture::reference_grid();
  om::io::write_catalog_json(out / "catalog.json", cat);
  om::io::write_forecasts_csv(out / "forecasts.csv", grid, cat,
                              om::fixture::reference_forecasts(grid, cat));
  ordered_json run{
      {"catalog", "catalog.json"},
      {"forecasts", "forecasts.csv"},
      {"grid", {{"hours_per_day", grid.hours_per_day}, {"days", grid.days}, {"years", grid.years}}},
      {"economics",
       {{"discount_rate", 0.08}, {"shed_penalty", 1e6}, {"sea_density", 1025.0}, {"gravity", 9.81}}},
      {"uncertainty",
       {{"beta_load", 0.5},
        {"beta_tpg", 0.5},
        {"gamma_load", 0.5},
        {"gamma_tpg", 0.5},
        {"delta_t", 0},
        {"tpg_budget_per_unit", false}}},
      {"solver", {{"backend", "highs"}, {"rel_gap", 1e-9}, {"seed", 0}, {"threads", 1}}},
      {"ccg", {{"eps", 1e-4}, {"max_iter", 50}, {"method", "dual"}}}};
  std::ofstream f(out / "run.json");
  f << run.dump(2) << "\n";
  if (!f) throw std::runtime_error("cannot write " + (out / "run.json").string());
}

int dispatch_command(const std::string& command, const CommonArgs& args,
                     const std::vector<std::string>& axes, const std::string& job,
                     const std::string& plan_file) {
  if (command == "make-fixture") {
    make_fixture(args.out);
    std::printf("fixture written to %s\n", args.out.c_str());
    return 0;
  }

  const auto t0 = std::chrono::steady_clock::now();
  om::io::RunConfig rc = load_and_override(args);
  const fs::path out = args.out;
  fs::create_directories(out);

  if (command == "plan-dpm") {
    const double total = run_dpm(rc, out);
    std::printf("dpm total cost: %.6f\n", total);
  } else if (command == "plan-rpm") {
    const double total = run_rpm(rc, out);
    std::printf("rpm total cost: %.6f\n", total);
  } else if (command == "evaluate") {
    const double total = run_evaluate(rc, out, plan_file);
    std::printf("evaluated total cost: %.6f\n", total);
  } else if (command == "sweep") {
    run_sweep(rc, out, axes, job, plan_file, args.threads > 0 ? args.threads : rc.solver.threads);
    std::printf("sweep written to %s\n", (out / "sweep.csv").string().c_str());
  }

  const auto t1 = std::chrono::steady_clock::now();
  auto solver = rc.solver.make();
  om::io::ManifestInfo info;
  info.command = command;
  info.solver_name = solver->name();
  info.solver_version = solver->version();
  info.seed = rc.solver.options.seed;
  info.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
  om::io::write_manifest(out, rc, info);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"islanded offshore microgrid planning studies"};
  app.require_subcommand(1);

  CommonArgs dpm_args, rpm_args, eval_args, sweep_args, fixture_args;
  std::string eval_plan, sweep_plan, sweep_job = "rpm";
  std::vector<std::string> sweep_axes;

  auto* dpm = app.add_subcommand("plan-dpm", "solve the deterministic planning model");
  add_common(dpm, dpm_args);

  auto* rpm = app.add_subcommand("plan-rpm", "solve the robust planning model with C&CG");
  add_common(rpm, rpm_args);
  rpm->add_option("--method", rpm_args.method, "worst-case subproblem method: dual|enum");

  auto* ev = app.add_subcommand("evaluate", "dispatch a fixed plan under its worst case");
  add_common(ev, eval_args);
  ev->add_option("--plan", eval_plan, "plan.json to evaluate")->required();
  ev->add_option("--method", eval_args.method, "worst-case subproblem method: dual|enum");

  auto* sw = app.add_subcommand("sweep", "run a job over a parameter grid");
  add_common(sw, sweep_args);
  sw->add_option("--axis", sweep_axes, "axis as name=v1,v2,... (repeatable)")->required();
  sw->add_option("--job", sweep_job, "dpm | rpm | evaluate");
  sw->add_option("--plan", sweep_plan, "plan.json for --job evaluate");
  sw->add_option("--method", sweep_args.method, "worst-case subproblem method: dual|enum");

  auto* fx = app.add_subcommand("make-fixture", "write the reference catalog and forecasts");
  fx->add_option("--out", fixture_args.out, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  const std::string command = app.get_subcommands().front()->get_name();
  const CommonArgs& args = command == "plan-dpm"    ? dpm_args
                           : command == "plan-rpm"  ? rpm_args
                           : command == "evaluate"  ? eval_args
                           : command == "sweep"     ? sweep_args
                                                    : fixture_args;
  try {
    return dispatch_command(command, args, sweep_axes,
                            sweep_job, command == "evaluate" ? eval_plan : sweep_plan);
  } catch (const om::io::ValidationError& e) {
    ordered_json err{{"error", {{"type", "validation"}, {"message", "invalid inputs"},
                                {"details", e.errors()}}}};
    std::cerr << err.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    ordered_json err{{"error", {{"type", "runtime"}, {"message", e.what()}}}};
    std::cerr << err.dump(2) << "\n";
    return 1;
  }
}
