#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace om::mip {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Matrix coefficients below this magnitude are numerical dust from input
// formulas (e.g. sin at a node); they are dropped at row construction.
inline constexpr double kCoefficientDropTol = 1e-13;

enum class VarType : std::uint8_t { Continuous, Binary };
enum class RowSense : std::uint8_t { LE, GE, EQ };
enum class ObjSense : std::uint8_t { Minimize, Maximize };

/// In-memory MILP: bounded columns, linear rows, linear objective. Column
/// and row order is the declaration order, which makes exports and solves
/// reproducible.
class LinearModel {
 public:
  ObjSense sense = ObjSense::Minimize;
  double objective_offset = 0.0;

  int add_col(std::string name, double lower, double upper, double cost,
              VarType type = VarType::Continuous);
  int add_row(std::string name, RowSense sense, double rhs,
              std::span<const std::pair<int, double>> entries);

  int num_cols() const { return static_cast<int>(col_cost_.size()); }
  int num_rows() const { return static_cast<int>(row_rhs_.size()); }
  int num_entries() const { return static_cast<int>(a_val_.size()); }

  void set_col_bounds(int col, double lower, double upper);
  void set_col_cost(int col, double cost) { col_cost_.at(static_cast<std::size_t>(col)) = cost; }
  void set_row_rhs(int row, double rhs) { row_rhs_.at(static_cast<std::size_t>(row)) = rhs; }

  double col_lower(int c) const { return col_lower_[static_cast<std::size_t>(c)]; }
  double col_upper(int c) const { return col_upper_[static_cast<std::size_t>(c)]; }
  double col_cost(int c) const { return col_cost_[static_cast<std::size_t>(c)]; }
  VarType col_type(int c) const { return col_type_[static_cast<std::size_t>(c)]; }
  const std::string& col_name(int c) const { return col_name_[static_cast<std::size_t>(c)]; }
  RowSense row_sense(int r) const { return row_sense_[static_cast<std::size_t>(r)]; }
  double row_rhs(int r) const { return row_rhs_[static_cast<std::size_t>(r)]; }
  const std::string& row_name(int r) const { return row_name_[static_cast<std::size_t>(r)]; }

  const std::vector<int>& entry_rows() const { return a_row_; }
  const std::vector<int>& entry_cols() const { return a_col_; }
  const std::vector<double>& entry_vals() const { return a_val_; }
  const std::vector<double>& col_costs() const { return col_cost_; }

  int num_binaries() const;

  /// Row activity and objective for a full assignment; used by tests and the
  /// feasibility audit.
  double objective_value(std::span<const double> x) const;
  std::vector<double> row_activity(std::span<const double> x) const;

 private:
  std::vector<double> col_lower_, col_upper_, col_cost_;
  std::vector<VarType> col_type_;
  std::vector<std::string> col_name_;
  std::vector<RowSense> row_sense_;
  std::vector<double> row_rhs_;
  std::vector<std::string> row_name_;
  std::vector<int> a_row_, a_col_;
  std::vector<double> a_val_;
};

}  // namespace om::mip
