#include "om/mip/model.hpp"

#include <cmath>
#include <stdexcept>

#include "om/mip/solver.hpp"

namespace om::mip {

int LinearModel::add_col(std::string name, double lower, double upper, double cost, VarType type) {
  if (lower > upper)
    throw std::invalid_argument("LinearModel: empty bound interval for column " + name);
  col_name_.push_back(std::move(name));
  col_lower_.push_back(lower);
  col_upper_.push_back(upper);
  col_cost_.push_back(cost);
  col_type_.push_back(type);
  return num_cols() - 1;
}

int LinearModel::add_row(std::string name, RowSense sense, double rhs,
                         std::span<const std::pair<int, double>> entries) {
  const int row = num_rows();
  row_name_.push_back(std::move(name));
  row_sense_.push_back(sense);
  row_rhs_.push_back(rhs);
  for (const auto& [col, val] : entries) {
    if (col < 0 || col >= num_cols())
      throw std::invalid_argument("LinearModel: row " + row_name_.back() +
                                  " references undeclared column");
    if (std::abs(val) < kCoefficientDropTol) continue;
    a_row_.push_back(row);
    a_col_.push_back(col);
    a_val_.push_back(val);
  }
  return row;
}

void LinearModel::set_col_bounds(int col, double lower, double upper) {
  if (lower > upper)
    throw std::invalid_argument("LinearModel: empty bound interval for column " +
                                col_name_.at(static_cast<std::size_t>(col)));
  col_lower_[static_cast<std::size_t>(col)] = lower;
  col_upper_[static_cast<std::size_t>(col)] = upper;
}

int LinearModel::num_binaries() const {
  int n = 0;
  for (VarType t : col_type_)
    if (t == VarType::Binary) ++n;
  return n;
}

double LinearModel::objective_value(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != num_cols())
    throw std::invalid_argument("objective_value: assignment size mismatch");
  double v = objective_offset;
  for (int c = 0; c < num_cols(); ++c) v += col_cost_[static_cast<std::size_t>(c)] * x[c];
  return v;
}

std::vector<double> LinearModel::row_activity(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != num_cols())
    throw std::invalid_argument("row_activity: assignment size mismatch");
  std::vector<double> act(static_cast<std::size_t>(num_rows()), 0.0);
  for (std::size_t e = 0; e < a_val_.size(); ++e)
    act[static_cast<std::size_t>(a_row_[e])] += a_val_[e] * x[static_cast<std::size_t>(a_col_[e])];
  return act;
}

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Unbounded: return "unbounded";
    case SolveStatus::Limit: return "limit";
    case SolveStatus::Error: return "error";
  }
  return "unknown";
}

}  // namespace om::mip
