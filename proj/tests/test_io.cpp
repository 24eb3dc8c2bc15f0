#include <unistd.h>

#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "om/fixture.hpp"
#include "om/io.hpp"

using namespace om;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("om_io_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void write_reference_bundle(const fs::path& dir) {
  const auto cat = fixture::reference_catalog();
  const auto grid = fixture::reference_grid();
  io::write_catalog_json(dir / "catalog.json", cat);
  io::write_forecasts_csv(dir / "forecasts.csv", grid, cat,
                          fixture::reference_forecasts(grid, cat));
  std::ofstream run(dir / "run.json");
  run << R"({
  "catalog": "catalog.json",
  "forecasts": "forecasts.csv",
  "grid": {"hours_per_day": 24, "days": 1, "years": 1},
  "economics": {"discount_rate": 0.08, "shed_penalty": 1e6},
  "uncertainty": {"beta_load": 0.5, "beta_tpg": 0.5, "gamma_load": 0.5, "gamma_tpg": 0.5},
  "ccg": {"eps": 1e-4, "max_iter": 50, "method": "dual"}
})";
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("reference bundle loads cleanly") {
    TempDir tmp;
    write_reference_bundle(tmp.path);
    const auto rc = io::load_run_config(tmp.path / "run.json");
    CHECK(rc.grid.hours_per_day == 24);
    CHECK(rc.catalog.num_candidates() == 15);
    CHECK(rc.uncertainty.beta_load == 0.5);
    CHECK(rc.forecasts.load_mw.at(0, 0, 15) ==
          doctest::Approx(fixture::diurnal_load_mw(15)).epsilon(1e-11));
  }

  TEST_CASE("catalog JSON round-trips exactly") {
    TempDir tmp;
    const auto cat = fixture::reference_catalog();
    io::write_catalog_json(tmp.path / "c.json", cat);
    const auto back = io::load_catalog_json(tmp.path / "c.json");
    CHECK(back.num_candidates() == cat.num_candidates());
    for (std::size_t i = 0; i < cat.dispatchable.size(); ++i) {
      CHECK(back.dispatchable[i].id == cat.dispatchable[i].id);
      CHECK(back.dispatchable[i].rated_power_mw == cat.dispatchable[i].rated_power_mw);
      CHECK(back.dispatchable[i].op_cost_per_mwh == cat.dispatchable[i].op_cost_per_mwh);
    }
    CHECK(back.tidal[0].area_m2 == cat.tidal[0].area_m2);
    CHECK(back.desalination.daily_demand_t == cat.desalination.daily_demand_t);
    // writing twice gives identical bytes
    io::write_catalog_json(tmp.path / "c2.json", cat);
    CHECK(slurp(tmp.path / "c.json") == slurp(tmp.path / "c2.json"));
  }

  TEST_CASE("forecast CSV round-trips to 12 significant digits") {
    TempDir tmp;
    const auto cat = fixture::reference_catalog();
    const auto grid = fixture::reference_grid();
    const auto f = fixture::reference_forecasts(grid, cat);
    io::write_forecasts_csv(tmp.path / "f.csv", grid, cat, f);
    const auto back = io::load_forecasts_csv(tmp.path / "f.csv", grid, cat);
    for (int h = 0; h < 24; ++h) {
      CHECK(back.load_mw.at(0, 0, h) == doctest::Approx(f.load_mw.at(0, 0, h)).epsilon(1e-11));
      CHECK(back.tidal_height_m.at(0, 0, h) ==
            doctest::Approx(f.tidal_height_m.at(0, 0, h)).epsilon(1e-11));
    }
  }

  TEST_CASE("bad efficiency is reported with field and bound") {
    TempDir tmp;
    write_reference_bundle(tmp.path);
    // corrupt the catalog
    auto text = slurp(tmp.path / "catalog.json");
    const auto pos = text.find("\"efficiency\": 0.9");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 17, "\"efficiency\": 1.2");
    std::ofstream(tmp.path / "catalog.json") << text;
    try {
      io::load_run_config(tmp.path / "run.json");
      FAIL("expected ValidationError");
    } catch (const io::ValidationError& e) {
      REQUIRE(e.errors().size() >= 1);
      CHECK(e.errors()[0].find("efficiency") != std::string::npos);
      CHECK(e.errors()[0].find("(0, 1]") != std::string::npos);
    }
  }

  TEST_CASE("a missing forecast row names the slot") {
    TempDir tmp;
    write_reference_bundle(tmp.path);
    auto lines = slurp(tmp.path / "forecasts.csv");
    const auto cut = lines.find("\n1,1,7,");
    REQUIRE(cut != std::string::npos);
    const auto next = lines.find('\n', cut + 1);
    lines.erase(cut, next - cut);
    std::ofstream(tmp.path / "forecasts.csv") << lines;
    try {
      io::load_run_config(tmp.path / "run.json");
      FAIL("expected ValidationError");
    } catch (const io::ValidationError& e) {
      bool found = false;
      for (const auto& msg : e.errors())
        found = found || msg.find("(y=1,d=1,h=7)") != std::string::npos;
      CHECK(found);
    }
  }

  TEST_CASE("every validation error is collected, not only the first") {
    TempDir tmp;
    write_reference_bundle(tmp.path);
    auto text = slurp(tmp.path / "catalog.json");
    auto replace_once = [&](const std::string& from, const std::string& to) {
      const auto pos = text.find(from);
      REQUIRE(pos != std::string::npos);
      text.replace(pos, from.size(), to);
    };
    replace_once("\"efficiency\": 0.9", "\"efficiency\": 1.2");
    replace_once("\"rated_power_mw\": 6", "\"rated_power_mw\": -6");
    std::ofstream(tmp.path / "catalog.json") << text;
    try {
      io::load_run_config(tmp.path / "run.json");
      FAIL("expected ValidationError");
    } catch (const io::ValidationError& e) {
      CHECK(e.errors().size() >= 2);
    }
  }

  TEST_CASE("plan JSON round-trips and rejects unknown devices") {
    TempDir tmp;
    const auto cat = fixture::reference_catalog();
    auto plan = InvestmentPlan::none(cat);
    plan.du[0] = plan.du[2] = 1;
    plan.tpg[1] = 1;
    plan.ess[2] = 1;
    io::write_plan_json(tmp.path / "plan.json", cat, plan);
    CHECK(io::read_plan_json(tmp.path / "plan.json", cat) == plan);

    auto text = slurp(tmp.path / "plan.json");
    const auto pos = text.find("\"du1\"");
    REQUIRE(pos != std::string::npos);
    auto broken = text;
    broken.replace(pos, 5, "\"duX\"");
    std::ofstream(tmp.path / "plan.json") << broken;
    CHECK_THROWS_AS(io::read_plan_json(tmp.path / "plan.json", cat), io::ValidationError);
  }

  TEST_CASE("file hashing is stable and content sensitive") {
    TempDir tmp;
    std::ofstream(tmp.path / "a.txt") << "hello";
    std::ofstream(tmp.path / "b.txt") << "hello";
    std::ofstream(tmp.path / "c.txt") << "hellp";
    CHECK(io::fnv1a_file(tmp.path / "a.txt") == io::fnv1a_file(tmp.path / "b.txt"));
    CHECK(io::fnv1a_file(tmp.path / "a.txt") != io::fnv1a_file(tmp.path / "c.txt"));
  }
}
