#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "om/mip/mps.hpp"
#include "om/mip/solver.hpp"

using namespace om::mip;

namespace {

LinearModel knapsack() {
  // two items, capacity excludes taking both; the higher value item wins
  LinearModel m;
  m.sense = ObjSense::Maximize;
  const int a = m.add_col("a", 0, 1, 5.0, VarType::Binary);
  const int b = m.add_col("b", 0, 1, 4.0, VarType::Binary);
  const std::pair<int, double> e[] = {{a, 3.0}, {b, 2.0}};
  m.add_row("cap", RowSense::LE, 4.0, e);
  return m;
}

std::filesystem::path temp_path(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_SUITE("solver") {
  TEST_CASE("bounded maximization") {
    LinearModel m;
    m.sense = ObjSense::Maximize;
    m.add_col("x", 0, 3, 1.0);
    auto s = make_solver("highs");
    const auto o = s->solve(m, {});
    REQUIRE(o.optimal());
    CHECK(o.objective == doctest::Approx(3.0));
    CHECK(o.col_value[0] == doctest::Approx(3.0));
  }

  TEST_CASE("infeasible bounds are reported") {
    LinearModel m;
    const int x = m.add_col("x", 0, kInf, 1.0);
    const std::pair<int, double> ge[] = {{x, 1.0}};
    m.add_row("r1", RowSense::GE, 1.0, ge);
    const std::pair<int, double> le[] = {{x, 1.0}};
    m.add_row("r2", RowSense::LE, 0.0, le);
    auto s = make_solver("highs");
    CHECK(s->solve(m, {}).status == SolveStatus::Infeasible);
  }

  TEST_CASE("binary knapsack picks the better item") {
    auto s = make_solver("highs");
    const auto o = s->solve(knapsack(), {});
    REQUIRE(o.optimal());
    CHECK(o.objective == doctest::Approx(5.0));
    CHECK(o.col_value[0] == doctest::Approx(1.0));
    CHECK(o.col_value[1] == doctest::Approx(0.0));
  }

  TEST_CASE("objective offset carried through solve and export") {
    LinearModel m;
    m.objective_offset = 10.0;
    m.add_col("x", 0, 2, 1.0);
    auto s = make_solver("highs");
    CHECK(s->solve(m, {}).objective == doctest::Approx(10.0));

    const auto p = temp_path("om_offset.mps");
    export_model(m, p);
    CHECK(s->solve_file(p, {}).objective == doctest::Approx(10.0));
    std::filesystem::remove(p);
  }

  TEST_CASE("unknown backend is rejected with the available list") {
    CHECK_THROWS_WITH_AS(make_solver("cplex"),
                         doctest::Contains("unknown solver backend"), std::invalid_argument);
  }

  TEST_CASE("mps export reimports to the same optimum") {
    const LinearModel m = knapsack();
    const auto p = temp_path("om_knapsack.mps");
    export_model(m, p);
    auto s = make_solver("highs");
    const auto direct = s->solve(m, {});
    const auto file = s->solve_file(p, {});
    REQUIRE(direct.optimal());
    REQUIRE(file.optimal());
    CHECK(file.objective == doctest::Approx(direct.objective).epsilon(1e-9));
    std::filesystem::remove(p);
  }

  TEST_CASE("mps export is byte-stable") {
    std::ostringstream a, b;
    write_mps(knapsack(), a);
    write_mps(knapsack(), b);
    CHECK(a.str() == b.str());
    CHECK(a.str().find("MARKER") != std::string::npos);
    CHECK(a.str().find("OBJSENSE") != std::string::npos);
  }

  TEST_CASE("row activity helper") {
    LinearModel m = knapsack();
    const std::vector<double> x{1.0, 0.0};
    CHECK(m.objective_value(x) == doctest::Approx(5.0));
    CHECK(m.row_activity(x)[0] == doctest::Approx(3.0));
  }
}
