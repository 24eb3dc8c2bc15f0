// End-to-end exercise of the command-line tool: fixture generation, both
// planners, plan evaluation, a sweep, determinism of rerun outputs, and the
// machine-readable failure path. Invoked by ctest with the binary path.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
  std::printf("[%s] %s\n", ok ? "ok" : "FAIL", what.c_str());
  if (!ok) ++failures;
}

int run(const std::string& cmd) {
  const int rc = std::system((cmd + " > /dev/null 2> /dev/null").c_str());
  return rc;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

bool same_bytes(const fs::path& a, const fs::path& b) { return slurp(a) == slurp(b); }

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::printf("usage: om_cli_test <path-to-om-binary>\n");
    return 2;
  }
  const std::string om = argv[1];
  const fs::path work = fs::temp_directory_path() / "om_cli_test";
  fs::remove_all(work);
  fs::create_directories(work);
  const std::string fixture = (work / "fixture").string();
  const auto out = [&](const char* name) { return (work / name).string(); };

  check(run(om + " make-fixture --out " + fixture) == 0, "make-fixture succeeds");
  check(fs::exists(fixture + "/run.json") && fs::exists(fixture + "/catalog.json") &&
            fs::exists(fixture + "/forecasts.csv"),
        "fixture files exist");

  const std::string cfg = " --config " + fixture + "/run.json";

  check(run(om + " plan-dpm" + cfg + " --out " + out("dpm")) == 0, "plan-dpm succeeds");
  for (const char* f : {"plan.json", "schedule.csv", "costs.json", "manifest.json"})
    check(fs::exists(work / "dpm" / f), std::string("dpm emits ") + f);

  check(run(om + " plan-rpm" + cfg + " --out " + out("rpm")) == 0, "plan-rpm succeeds");
  for (const char* f :
       {"plan.json", "schedule.csv", "costs.json", "trace.csv", "realization.json",
        "manifest.json"})
    check(fs::exists(work / "rpm" / f), std::string("rpm emits ") + f);

  check(run(om + " plan-rpm" + cfg + " --out " + out("rpm2")) == 0, "plan-rpm rerun succeeds");
  for (const char* f :
       {"plan.json", "schedule.csv", "costs.json", "trace.csv", "realization.json"})
    check(same_bytes(work / "rpm" / f, work / "rpm2" / f),
          std::string("rerun is byte-identical for ") + f);

  check(run(om + " evaluate" + cfg + " --plan " + out("dpm") + "/plan.json --out " +
            out("eval")) == 0,
        "evaluate succeeds");
  check(fs::exists(work / "eval" / "costs.json"), "evaluate emits costs.json");
  {
    const std::string costs = slurp(work / "eval" / "costs.json");
    check(costs.find("total_shed_mw") != std::string::npos, "evaluation reports shedding");
  }

  check(run(om + " sweep" + cfg + " --axis gamma=0,0.25 --job dpm --out " + out("sweep")) == 0,
        "sweep succeeds");
  check(fs::exists(work / "sweep" / "sweep.csv"), "sweep emits sweep.csv");

  // failure path: broken config must exit nonzero with machine-readable JSON
  {
    std::ofstream bad(work / "bad.json");
    bad << "{\"catalog\": \"nope.json\", \"forecasts\": \"nope.csv\"}";
  }
  const int rc = std::system(
      (om + " plan-dpm --config " + (work / "bad.json").string() + " --out " + out("bad") +
       " > /dev/null 2> " + (work / "err.json").string())
          .c_str());
  check(rc != 0, "broken config exits nonzero");
  {
    const std::string err = slurp(work / "err.json");
    check(err.find("\"error\"") != std::string::npos, "stderr carries an error JSON");
  }

  if (failures == 0) fs::remove_all(work);
  std::printf(failures ? "%d failures\n" : "all cli checks passed (%d)\n", failures);
  return failures == 0 ? 0 : 1;
}
