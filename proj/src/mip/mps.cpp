#include "om/mip/mps.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>

namespace om::mip {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

char sense_char(RowSense s) {
  switch (s) {
    case RowSense::LE: return 'L';
    case RowSense::GE: return 'G';
    case RowSense::EQ: return 'E';
  }
  return '?';
}

}  // namespace

void write_mps(const LinearModel& m, std::ostream& out) {
  constexpr const char* kObjRow = "COST";

  out << "NAME MODEL\n";
  if (m.sense == ObjSense::Maximize) out << "OBJSENSE\n MAXIMIZE\n";

  out << "ROWS\n";
  out << " N " << kObjRow << "\n";
  for (int r = 0; r < m.num_rows(); ++r)
    out << " " << sense_char(m.row_sense(r)) << " " << m.row_name(r) << "\n";

  // column-major view, duplicates coalesced, rows in declaration order
  std::vector<std::map<int, double>> cols(static_cast<std::size_t>(m.num_cols()));
  const auto& er = m.entry_rows();
  const auto& ec = m.entry_cols();
  const auto& ev = m.entry_vals();
  for (std::size_t e = 0; e < ev.size(); ++e) cols[static_cast<std::size_t>(ec[e])][er[e]] += ev[e];

  out << "COLUMNS\n";
  bool in_int = false;
  int marker = 0;
  for (int c = 0; c < m.num_cols(); ++c) {
    const bool integral = m.col_type(c) == VarType::Binary;
    if (integral != in_int) {
      out << " M" << marker++ << " 'MARKER' " << (integral ? "'INTORG'" : "'INTEND'") << "\n";
      in_int = integral;
    }
    const std::string& name = m.col_name(c);
    // every column appears at least once so readers register it
    if (m.col_cost(c) != 0.0 || cols[static_cast<std::size_t>(c)].empty())
      out << " " << name << " " << kObjRow << " " << num(m.col_cost(c)) << "\n";
    for (const auto& [r, v] : cols[static_cast<std::size_t>(c)])
      out << " " << name << " " << m.row_name(r) << " " << num(v) << "\n";
  }
  if (in_int) out << " M" << marker++ << " 'MARKER' 'INTEND'\n";

  out << "RHS\n";
  if (m.objective_offset != 0.0)
    out << " RHS " << kObjRow << " " << num(-m.objective_offset) << "\n";
  for (int r = 0; r < m.num_rows(); ++r)
    if (m.row_rhs(r) != 0.0) out << " RHS " << m.row_name(r) << " " << num(m.row_rhs(r)) << "\n";

  out << "BOUNDS\n";
  for (int c = 0; c < m.num_cols(); ++c) {
    const std::string& name = m.col_name(c);
    const double lo = m.col_lower(c), up = m.col_upper(c);
    if (lo == up) {
      out << " FX BND " << name << " " << num(lo) << "\n";
      continue;
    }
    if (std::isinf(lo))
      out << " MI BND " << name << "\n";
    else
      out << " LO BND " << name << " " << num(lo) << "\n";
    if (std::isinf(up))
      out << " PL BND " << name << "\n";
    else
      out << " UP BND " << name << " " << num(up) << "\n";
  }
  out << "ENDATA\n";
}

void export_model(const LinearModel& m, const std::filesystem::path& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("export_model: cannot open " + path.string());
  write_mps(m, f);
  f.flush();
  if (!f) throw std::runtime_error("export_model: write failed for " + path.string());
}

}  // namespace om::mip
