#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "om/mip/model.hpp"

namespace om::mip {

struct SolveOptions {
  double time_limit_sec = 1e30;
  // Contract tolerances are 1e-6; the backend defaults run tighter so that
  // chained comparisons (bounds, oracle equivalence) stay inside 1e-6.
  double rel_gap = 1e-9;
  int seed = 0;
  int threads = 1;
  bool verbose = false;
};

enum class SolveStatus : std::uint8_t { Optimal, Infeasible, Unbounded, Limit, Error };

std::string to_string(SolveStatus s);

struct SolveOutcome {
  SolveStatus status = SolveStatus::Error;
  double objective = 0.0;
  std::vector<double> col_value;  // empty unless a solution is available
  double wall_seconds = 0.0;
  std::string detail;

  bool optimal() const { return status == SolveStatus::Optimal; }
  bool has_solution() const { return !col_value.empty(); }
};

/// MILP engine behind the modeling layer. Implementations must be safe to
/// use from different threads as long as each instance is confined to one.
class Solver {
 public:
  virtual ~Solver() = default;
  virtual std::string name() const = 0;
  virtual std::string version() const = 0;
  virtual SolveOutcome solve(const LinearModel& model, const SolveOptions& options) = 0;
  /// Solve a model file (MPS); used to check export/reimport fidelity.
  virtual SolveOutcome solve_file(const std::filesystem::path& path,
                                  const SolveOptions& options) = 0;
};

/// Instantiate a backend by name. Only "highs" is compiled in; the set of
/// names is reported by the error message on a miss.
std::unique_ptr<Solver> make_solver(const std::string& backend);

std::vector<std::string> available_backends();

}  // namespace om::mip
