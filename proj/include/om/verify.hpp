#pragma once

#include <string>
#include <vector>

#include "om/catalog.hpp"
#include "om/dispatch.hpp"
#include "om/schedule.hpp"

namespace om {

struct Violation {
  std::string constraint;  // e.g. "soc-cyclic", "balance"
  std::string index;       // offending (unit, y, d, h) rendered for humans
  double residual = 0;     // amount by which the constraint is missed

  std::string to_string() const { return constraint + " at " + index + " residual=" +
                                         std::to_string(residual); }
};

/// Audit a schedule against the full operation constraint set for the given
/// plan and realized inputs. Empty result = feasible within tolerance.
std::vector<Violation> verify_schedule(const InvestmentPlan& plan,
                                       const OperationSchedule& schedule,
                                       const RealizedInputs& realized, const DeviceCatalog& cat,
                                       const TimeGrid& grid, double tol = 1e-6);

}  // namespace om
