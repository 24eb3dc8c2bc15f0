#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

#include "Highs.h"
#include "om/mip/solver.hpp"

namespace om::mip {

namespace {

class HighsSolver final : public Solver {
 public:
  std::string name() const override { return "highs"; }
  std::string version() const override { return std::string(highsVersion()); }

  SolveOutcome solve(const LinearModel& model, const SolveOptions& options) override {
    Highs highs;
    configure(highs, options);

    HighsLp lp;
    lp.num_col_ = model.num_cols();
    lp.num_row_ = model.num_rows();
    lp.sense_ = model.sense == ObjSense::Minimize ? ::ObjSense::kMinimize : ::ObjSense::kMaximize;
    lp.offset_ = model.objective_offset;
    lp.col_cost_.assign(model.col_costs().begin(), model.col_costs().end());
    lp.col_lower_.resize(static_cast<std::size_t>(model.num_cols()));
    lp.col_upper_.resize(static_cast<std::size_t>(model.num_cols()));
    for (int c = 0; c < model.num_cols(); ++c) {
      lp.col_lower_[static_cast<std::size_t>(c)] = model.col_lower(c);
      lp.col_upper_[static_cast<std::size_t>(c)] = model.col_upper(c);
    }
    lp.row_lower_.resize(static_cast<std::size_t>(model.num_rows()));
    lp.row_upper_.resize(static_cast<std::size_t>(model.num_rows()));
    for (int r = 0; r < model.num_rows(); ++r) {
      const double rhs = model.row_rhs(r);
      switch (model.row_sense(r)) {
        case RowSense::LE:
          lp.row_lower_[static_cast<std::size_t>(r)] = -kHighsInf;
          lp.row_upper_[static_cast<std::size_t>(r)] = rhs;
          break;
        case RowSense::GE:
          lp.row_lower_[static_cast<std::size_t>(r)] = rhs;
          lp.row_upper_[static_cast<std::size_t>(r)] = kHighsInf;
          break;
        case RowSense::EQ:
          lp.row_lower_[static_cast<std::size_t>(r)] = rhs;
          lp.row_upper_[static_cast<std::size_t>(r)] = rhs;
          break;
      }
    }
    if (model.num_binaries() > 0) {
      lp.integrality_.assign(static_cast<std::size_t>(model.num_cols()),
                             HighsVarType::kContinuous);
      for (int c = 0; c < model.num_cols(); ++c)
        if (model.col_type(c) == VarType::Binary)
          lp.integrality_[static_cast<std::size_t>(c)] = HighsVarType::kInteger;
    }

    // column-wise matrix, duplicate entries coalesced
    std::vector<std::map<int, double>> cols(static_cast<std::size_t>(model.num_cols()));
    const auto& er = model.entry_rows();
    const auto& ec = model.entry_cols();
    const auto& ev = model.entry_vals();
    for (std::size_t e = 0; e < ev.size(); ++e)
      cols[static_cast<std::size_t>(ec[e])][er[e]] += ev[e];
    lp.a_matrix_.format_ = MatrixFormat::kColwise;
    lp.a_matrix_.num_col_ = model.num_cols();
    lp.a_matrix_.num_row_ = model.num_rows();
    lp.a_matrix_.start_.assign(1, 0);
    for (const auto& col : cols) {
      for (const auto& [r, v] : col) {
        lp.a_matrix_.index_.push_back(r);
        lp.a_matrix_.value_.push_back(v);
      }
      lp.a_matrix_.start_.push_back(static_cast<HighsInt>(lp.a_matrix_.index_.size()));
    }

    // kWarning covers benign notices (e.g. ignored near-zero coefficients)
    if (highs.passModel(lp) == HighsStatus::kError)
      return {SolveStatus::Error, 0.0, {}, 0.0, "highs rejected the model"};
    return run(highs);
  }

  SolveOutcome solve_file(const std::filesystem::path& path,
                          const SolveOptions& options) override {
    Highs highs;
    configure(highs, options);
    if (highs.readModel(path.string()) != HighsStatus::kOk)
      return {SolveStatus::Error, 0.0, {}, 0.0, "highs could not read " + path.string()};
    return run(highs);
  }

 private:
  static void configure(Highs& highs, const SolveOptions& o) {
    highs.setOptionValue("output_flag", o.verbose);
    highs.setOptionValue("random_seed", o.seed);
    highs.setOptionValue("threads", std::max(1, o.threads));
    highs.setOptionValue("time_limit", o.time_limit_sec);
    highs.setOptionValue("mip_rel_gap", o.rel_gap);
    // big-M linearizations need tight integrality before scaling by M
    highs.setOptionValue("mip_feasibility_tolerance", 1e-9);
    highs.setOptionValue("primal_feasibility_tolerance", 1e-9);
    highs.setOptionValue("dual_feasibility_tolerance", 1e-9);
  }

  static SolveOutcome run(Highs& highs) {
    const auto t0 = std::chrono::steady_clock::now();
    const HighsStatus rc = highs.run();
    const auto t1 = std::chrono::steady_clock::now();
    SolveOutcome out;
    out.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
    if (rc == HighsStatus::kError) {
      out.status = SolveStatus::Error;
      out.detail = "highs run() failed";
      return out;
    }
    const HighsModelStatus st = highs.getModelStatus();
    const bool feasible_point =
        highs.getInfo().primal_solution_status == kSolutionStatusFeasible;
    switch (st) {
      case HighsModelStatus::kOptimal: out.status = SolveStatus::Optimal; break;
      case HighsModelStatus::kInfeasible: out.status = SolveStatus::Infeasible; break;
      case HighsModelStatus::kUnbounded: out.status = SolveStatus::Unbounded; break;
      case HighsModelStatus::kTimeLimit:
      case HighsModelStatus::kIterationLimit:
      case HighsModelStatus::kSolutionLimit:
      case HighsModelStatus::kInterrupt:
        out.status = SolveStatus::Limit;
        break;
      default:
        out.status = SolveStatus::Error;
        out.detail = "highs status: " + highs.modelStatusToString(st);
        break;
    }
    if ((out.status == SolveStatus::Optimal || out.status == SolveStatus::Limit) &&
        feasible_point) {
      out.objective = highs.getObjectiveValue();
      out.col_value = highs.getSolution().col_value;
    }
    return out;
  }
};

}  // namespace

std::vector<std::string> available_backends() { return {"highs"}; }

std::unique_ptr<Solver> make_solver(const std::string& backend) {
  if (backend == "highs" || backend.empty()) return std::make_unique<HighsSolver>();
  std::string names;
  for (const auto& n : available_backends()) names += (names.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown solver backend '" + backend + "' (available: " + names +
                              ")");
}

}  // namespace om::mip
