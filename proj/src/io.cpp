#include "om/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace om::io {

using njson = nlohmann::ordered_json;

namespace {

std::string num12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

njson parse_file(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path.string());
  try {
    return njson::parse(f);
  } catch (const std::exception& e) {
    throw std::runtime_error(path.string() + ": JSON parse error: " + e.what());
  }
}

void dump_file(const std::filesystem::path& path, const njson& j) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f << j.dump(2) << "\n";
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

// error-accumulating field access
struct Fields {
  const njson& j;
  std::string ctx;
  std::vector<std::string>& errs;

  bool has(const char* key) const { return j.contains(key); }

  double num(const char* key, double fallback, bool required = false) const {
    if (!j.contains(key)) {
      if (required) errs.push_back(ctx + ": missing field '" + key + "'");
      return fallback;
    }
    if (!j[key].is_number()) {
      errs.push_back(ctx + ": field '" + key + "' must be a number");
      return fallback;
    }
    return j[key].get<double>();
  }

  int integer(const char* key, int fallback, bool required = false) const {
    const double v = num(key, fallback, required);
    return static_cast<int>(v);
  }

  bool boolean(const char* key, bool fallback) const {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_boolean()) {
      errs.push_back(ctx + ": field '" + key + "' must be a boolean");
      return fallback;
    }
    return j[key].get<bool>();
  }

  std::string str(const char* key, const std::string& fallback, bool required = false) const {
    if (!j.contains(key)) {
      if (required) errs.push_back(ctx + ": missing field '" + key + "'");
      return fallback;
    }
    if (!j[key].is_string()) {
      errs.push_back(ctx + ": field '" + key + "' must be a string");
      return fallback;
    }
    return j[key].get<std::string>();
  }

  std::vector<double> num_or_list(const char* key, std::vector<double> fallback) const {
    if (!j.contains(key)) return fallback;
    if (j[key].is_number()) return {j[key].get<double>()};
    if (j[key].is_array()) {
      std::vector<double> out;
      for (const auto& v : j[key]) {
        if (!v.is_number()) {
          errs.push_back(ctx + ": field '" + key + "' must hold numbers");
          return fallback;
        }
        out.push_back(v.get<double>());
      }
      return out;
    }
    errs.push_back(ctx + ": field '" + key + "' must be a number or array");
    return fallback;
  }
};

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::string ValidationError::join(const std::vector<std::string>& v) {
  std::string s = std::to_string(v.size()) + " validation error(s):";
  for (const auto& e : v) s += "\n  - " + e;
  return s;
}

DeviceCatalog load_catalog_json(const std::filesystem::path& path) {
  const njson j = parse_file(path);
  std::vector<std::string> errs;
  DeviceCatalog c;
  const std::string ctx = path.filename().string();

  auto for_each = [&](const char* section, auto&& fn) {
    if (!j.contains(section)) return;
    if (!j[section].is_array()) {
      errs.push_back(ctx + ": '" + std::string(section) + "' must be an array");
      return;
    }
    int n = 0;
    for (const auto& item : j[section]) {
      Fields f{item, ctx + ":" + section + "[" + std::to_string(n++) + "]", errs};
      fn(f);
    }
  };

  for_each("dispatchable", [&](const Fields& f) {
    c.dispatchable.push_back({f.str("id", "", true), f.num("rated_power_mw", 0, true),
                              f.num("op_cost_per_mwh", 0, true),
                              f.num("inv_cost_per_mw", 0, true)});
  });
  for_each("renewable", [&](const Fields& f) {
    const std::string kind = f.str("kind", "wind", true);
    if (kind != "wind" && kind != "solar")
      errs.push_back(f.ctx + ": kind must be 'wind' or 'solar'");
    c.renewable.push_back({f.str("id", "", true), f.num("rated_power_mw", 0, true),
                           f.num("inv_cost_per_mw", 0, true),
                           kind == "solar" ? RenewableKind::Solar : RenewableKind::Wind});
  });
  for_each("storage", [&](const Fields& f) {
    c.storage.push_back({f.str("id", "", true), f.num("rated_power_mw", 0, true),
                         f.num("rated_energy_mwh", 0, true), f.num("inv_cost_per_mw", 0, true),
                         f.num("inv_cost_per_mwh", 0, true), f.num("efficiency", 0.9, true)});
  });
  for_each("tidal", [&](const Fields& f) {
    c.tidal.push_back({f.str("id", "", true), f.num("rated_power_mw", 0, true),
                       f.num("inv_cost_per_mw", 0, true), f.num("area_m2", 0, true),
                       f.num("efficiency", 0.9, true), f.num("op_cost_per_mwh", 0)});
  });
  if (j.contains("desalination")) {
    Fields f{j["desalination"], ctx + ":desalination", errs};
    c.desalination = {f.num("rated_capacity_tph", 0, true), f.num("inv_cost_per_year", 0, true),
                      f.num("op_cost_per_ton", 0, true), f.num("power_per_ton_mw", 0, true),
                      f.num("daily_demand_t", 0, true)};
  } else {
    errs.push_back(ctx + ": missing 'desalination' section");
  }

  for (auto& e : c.validate()) errs.push_back(ctx + ": " + e);
  if (!errs.empty()) throw ValidationError(errs);
  return c;
}

void write_catalog_json(const std::filesystem::path& path, const DeviceCatalog& c) {
  njson j;
  for (const auto& u : c.dispatchable)
    j["dispatchable"].push_back({{"id", u.id},
                                 {"rated_power_mw", u.rated_power_mw},
                                 {"op_cost_per_mwh", u.op_cost_per_mwh},
                                 {"inv_cost_per_mw", u.inv_cost_per_mw}});
  for (const auto& u : c.renewable)
    j["renewable"].push_back({{"id", u.id},
                              {"rated_power_mw", u.rated_power_mw},
                              {"inv_cost_per_mw", u.inv_cost_per_mw},
                              {"kind", u.kind == RenewableKind::Wind ? "wind" : "solar"}});
  for (const auto& u : c.storage)
    j["storage"].push_back({{"id", u.id},
                            {"rated_power_mw", u.rated_power_mw},
                            {"rated_energy_mwh", u.rated_energy_mwh},
                            {"inv_cost_per_mw", u.inv_cost_per_mw},
                            {"inv_cost_per_mwh", u.inv_cost_per_mwh},
                            {"efficiency", u.efficiency}});
  for (const auto& u : c.tidal)
    j["tidal"].push_back({{"id", u.id},
                          {"rated_power_mw", u.rated_power_mw},
                          {"inv_cost_per_mw", u.inv_cost_per_mw},
                          {"area_m2", u.area_m2},
                          {"efficiency", u.efficiency},
                          {"op_cost_per_mwh", u.op_cost_per_mwh}});
  j["desalination"] = {{"rated_capacity_tph", c.desalination.rated_capacity_tph},
                       {"inv_cost_per_year", c.desalination.inv_cost_per_year},
                       {"op_cost_per_ton", c.desalination.op_cost_per_ton},
                       {"power_per_ton_mw", c.desalination.power_per_ton_mw},
                       {"daily_demand_t", c.desalination.daily_demand_t}};
  dump_file(path, j);
}

ForecastSet load_forecasts_csv(const std::filesystem::path& path, const TimeGrid& g,
                               const DeviceCatalog& cat) {
  std::ifstream f(path);
  if (!f) throw ValidationError({"cannot open " + path.string()});
  std::vector<std::string> errs;
  const std::string ctx = path.filename().string();

  std::string line;
  if (!std::getline(f, line)) throw ValidationError({ctx + ": empty file"});
  const auto header = split_csv_line(line);
  const std::vector<std::string> fixed = {"year", "day", "hour", "load_mw", "tidal_height_m"};
  std::vector<std::string> expected = fixed;
  for (const auto& u : cat.renewable) expected.push_back(u.id);
  if (header != expected) {
    std::string want;
    for (const auto& h : expected) want += (want.empty() ? "" : ",") + h;
    throw ValidationError({ctx + ": header must be exactly '" + want + "'"});
  }

  ForecastSet fs;
  fs.load_mw = Series3(g);
  fs.tidal_height_m = Series3(g);
  fs.ndu_availability_mw.assign(cat.renewable.size(), Series3(g));
  Grid3<std::uint8_t> seen(g);

  int lineno = 1;
  while (std::getline(f, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != expected.size()) {
      errs.push_back(ctx + ":" + std::to_string(lineno) + ": expected " +
                     std::to_string(expected.size()) + " columns, got " +
                     std::to_string(cells.size()));
      continue;
    }
    auto parse = [&](std::size_t i, double& out) {
      try {
        std::size_t pos = 0;
        out = std::stod(cells[i], &pos);
        if (pos != cells[i].size()) throw std::invalid_argument("trailing junk");
        return true;
      } catch (const std::exception&) {
        errs.push_back(ctx + ":" + std::to_string(lineno) + ": column '" + expected[i] +
                       "' is not a number: '" + cells[i] + "'");
        return false;
      }
    };
    double yv, dv, hv;
    if (!parse(0, yv) || !parse(1, dv) || !parse(2, hv)) continue;
    const int y = static_cast<int>(yv) - 1, d = static_cast<int>(dv) - 1,
              h = static_cast<int>(hv) - 1;
    if (y < 0 || y >= g.years || d < 0 || d >= g.days || h < 0 || h >= g.hours_per_day) {
      errs.push_back(ctx + ":" + std::to_string(lineno) + ": slot (y=" + std::to_string(y + 1) +
                     ",d=" + std::to_string(d + 1) + ",h=" + std::to_string(h + 1) +
                     ") outside the grid");
      continue;
    }
    if (seen.at(y, d, h)) {
      errs.push_back(ctx + ":" + std::to_string(lineno) + ": duplicate slot (y=" +
                     std::to_string(y + 1) + ",d=" + std::to_string(d + 1) +
                     ",h=" + std::to_string(h + 1) + ")");
      continue;
    }
    seen.at(y, d, h) = 1;
    double v;
    if (parse(3, v)) fs.load_mw.at(y, d, h) = v;
    if (parse(4, v)) fs.tidal_height_m.at(y, d, h) = v;
    for (std::size_t jcol = 0; jcol < cat.renewable.size(); ++jcol)
      if (parse(5 + jcol, v)) fs.ndu_availability_mw[jcol].at(y, d, h) = v;
  }

  for (int y = 0; y < g.years; ++y)
    for (int d = 0; d < g.days; ++d)
      for (int h = 0; h < g.hours_per_day; ++h)
        if (!seen.at(y, d, h))
          errs.push_back(ctx + ": missing row for (y=" + std::to_string(y + 1) +
                         ",d=" + std::to_string(d + 1) + ",h=" + std::to_string(h + 1) + ")");

  for (auto& e : fs.validate(g, cat)) errs.push_back(ctx + ": " + e);
  if (!errs.empty()) throw ValidationError(errs);
  return fs;
}

void write_forecasts_csv(const std::filesystem::path& path, const TimeGrid& g,
                         const DeviceCatalog& cat, const ForecastSet& fs) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f << "year,day,hour,load_mw,tidal_height_m";
  for (const auto& u : cat.renewable) f << "," << u.id;
  f << "\n";
  for (int y = 0; y < g.years; ++y)
    for (int d = 0; d < g.days; ++d)
      for (int h = 0; h < g.hours_per_day; ++h) {
        f << (y + 1) << "," << (d + 1) << "," << (h + 1) << "," << num12(fs.load_mw.at(y, d, h))
          << "," << num12(fs.tidal_height_m.at(y, d, h));
        for (std::size_t j = 0; j < cat.renewable.size(); ++j)
          f << "," << num12(fs.ndu_availability_mw[j].at(y, d, h));
        f << "\n";
      }
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

RunConfig load_run_config(const std::filesystem::path& path) {
  const njson j = parse_file(path);
  std::vector<std::string> errs;
  const std::string ctx = path.filename().string();
  RunConfig rc;
  rc.config_path = path;

  Fields top{j, ctx, errs};
  const std::string catalog_rel = top.str("catalog", "", true);
  const std::string forecasts_rel = top.str("forecasts", "", true);
  const auto base = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
  rc.catalog_path = base / catalog_rel;
  rc.forecasts_path = base / forecasts_rel;

  if (j.contains("grid")) {
    Fields f{j["grid"], ctx + ":grid", errs};
    rc.grid.hours_per_day = f.integer("hours_per_day", 24, true);
    rc.grid.days = f.integer("days", 1, true);
    rc.grid.years = f.integer("years", 1, true);
    rc.grid.day_weights = f.num_or_list("day_weights", {});
    if (rc.grid.day_weights.size() == 1 && rc.grid.days != 1)
      rc.grid.day_weights.assign(static_cast<std::size_t>(rc.grid.days),
                                 rc.grid.day_weights[0]);
  } else {
    errs.push_back(ctx + ": missing 'grid' section");
  }
  try {
    rc.grid.validate();
  } catch (const std::exception& e) {
    errs.push_back(ctx + ": " + e.what());
  }

  if (j.contains("economics")) {
    Fields f{j["economics"], ctx + ":economics", errs};
    rc.econ.discount_rate = f.num("discount_rate", 0.0, true);
    rc.econ.shed_penalty = f.num("shed_penalty", 1e6);
    rc.econ.sea_density = f.num("sea_density", 1025.0);
    rc.econ.gravity = f.num("gravity", 9.81);
    if (rc.econ.discount_rate < 0) errs.push_back(ctx + ": discount_rate must be >= 0");
    if (rc.econ.sea_density <= 0) errs.push_back(ctx + ": sea_density must be > 0");
    if (rc.econ.gravity <= 0) errs.push_back(ctx + ": gravity must be > 0");
  } else {
    errs.push_back(ctx + ": missing 'economics' section");
  }

  if (j.contains("uncertainty")) {
    Fields f{j["uncertainty"], ctx + ":uncertainty", errs};
    rc.uncertainty.beta_load = f.num("beta_load", 0.0);
    rc.uncertainty.beta_tpg = f.num("beta_tpg", 0.0);
    rc.uncertainty.gamma_load = f.num_or_list("gamma_load", {0.0});
    rc.uncertainty.gamma_tpg = f.num_or_list("gamma_tpg", {0.0});
    rc.uncertainty.delta_t = f.integer("delta_t", 0);
    rc.uncertainty.tpg_budget_per_unit = f.boolean("tpg_budget_per_unit", false);
  }

  if (j.contains("solver")) {
    Fields f{j["solver"], ctx + ":solver", errs};
    rc.solver.backend = f.str("backend", "");  // empty: resolved by the CLI ($OM_SOLVER)
    rc.solver.options.time_limit_sec = f.num("time_limit_sec", 1e30);
    rc.solver.options.rel_gap = f.num("rel_gap", 1e-9);
    rc.solver.options.seed = f.integer("seed", 0);
    rc.solver.threads = f.integer("threads", 1);
    if (rc.solver.threads < 1) errs.push_back(ctx + ": solver.threads must be >= 1");
    if (rc.solver.options.rel_gap < 0) errs.push_back(ctx + ": solver.rel_gap must be >= 0");
    if (!rc.solver.backend.empty()) {
      bool known = false;
      for (const auto& b : mip::available_backends()) known = known || b == rc.solver.backend;
      if (!known) errs.push_back(ctx + ": unknown solver backend '" + rc.solver.backend + "'");
    }
  }

  if (j.contains("model")) {
    Fields f{j["model"], ctx + ":model", errs};
    rc.model.ndu_availability_bound = f.boolean("ndu_availability_bound", true);
    rc.model.enforce_adequacy = f.boolean("enforce_adequacy", true);
    rc.model.cap_tpg_at_rated = f.boolean("cap_tpg_at_rated", true);
  }

  if (j.contains("ccg")) {
    Fields f{j["ccg"], ctx + ":ccg", errs};
    rc.ccg.eps = f.num("eps", 1e-4);
    rc.ccg.max_iter = f.integer("max_iter", 50);
    const std::string method = f.str("method", "dual");
    try {
      rc.ccg.method = parse_worst_case_method(method);
    } catch (const std::exception& e) {
      errs.push_back(ctx + ": " + e.what());
    }
    if (rc.ccg.eps <= 0) errs.push_back(ctx + ": ccg.eps must be > 0");
    if (rc.ccg.max_iter < 1) errs.push_back(ctx + ": ccg.max_iter must be >= 1");
  }

  // data files; unreadable inputs end the collection here
  if (!errs.empty()) throw ValidationError(errs);
  try {
    rc.catalog = load_catalog_json(rc.catalog_path);
  } catch (const ValidationError& e) {
    errs.insert(errs.end(), e.errors().begin(), e.errors().end());
  } catch (const std::exception& e) {
    errs.push_back(e.what());
  }
  if (errs.empty()) {
    try {
      rc.forecasts = load_forecasts_csv(rc.forecasts_path, rc.grid, rc.catalog);
    } catch (const ValidationError& e) {
      errs.insert(errs.end(), e.errors().begin(), e.errors().end());
    } catch (const std::exception& e) {
      errs.push_back(e.what());
    }
  }
  if (!errs.empty()) throw ValidationError(errs);

  // cross checks
  for (auto& e : rc.uncertainty.validate(rc.grid)) errs.push_back(ctx + ": " + e);
  if (rc.econ.shed_penalty <= rc.catalog.max_op_cost())
    errs.push_back(ctx + ": shed_penalty (" + std::to_string(rc.econ.shed_penalty) +
                   ") must exceed every levelized operation cost (max " +
                   std::to_string(rc.catalog.max_op_cost()) + ")");
  const auto& dsu = rc.catalog.desalination;
  if (rc.grid.hours_per_day * dsu.rated_capacity_tph < dsu.daily_demand_t - 1e-9)
    errs.push_back(ctx + ": daily water demand " + std::to_string(dsu.daily_demand_t) +
                   " t exceeds H * desalination capacity " +
                   std::to_string(rc.grid.hours_per_day * dsu.rated_capacity_tph) + " t");
  if (!errs.empty()) throw ValidationError(errs);

  rc.ccg.solver = rc.solver;
  rc.ccg.model = rc.model;
  return rc;
}

void write_plan_json(const std::filesystem::path& path, const DeviceCatalog& c,
                     const InvestmentPlan& p) {
  njson build = njson::object();
  for (std::size_t i = 0; i < c.dispatchable.size(); ++i)
    build[c.dispatchable[i].id] = static_cast<bool>(p.du[i]);
  for (std::size_t i = 0; i < c.renewable.size(); ++i)
    build[c.renewable[i].id] = static_cast<bool>(p.ndu[i]);
  for (std::size_t i = 0; i < c.storage.size(); ++i)
    build[c.storage[i].id] = static_cast<bool>(p.ess[i]);
  for (std::size_t i = 0; i < c.tidal.size(); ++i)
    build[c.tidal[i].id] = static_cast<bool>(p.tpg[i]);
  njson j;
  j["build"] = build;
  j["installed_mw"] = {{"du", p.installed_du_mw(c)},
                       {"ndu", p.installed_ndu_mw(c)},
                       {"ess", p.installed_ess_mw(c)},
                       {"tpg", p.installed_tpg_mw(c)}};
  dump_file(path, j);
}

InvestmentPlan read_plan_json(const std::filesystem::path& path, const DeviceCatalog& c) {
  const njson j = parse_file(path);
  std::vector<std::string> errs;
  if (!j.contains("build") || !j["build"].is_object())
    throw ValidationError({path.string() + ": missing 'build' object"});
  const auto& build = j["build"];
  std::set<std::string> known;
  InvestmentPlan p;
  auto pick = [&](const std::string& id) -> std::uint8_t {
    known.insert(id);
    if (!build.contains(id)) {
      errs.push_back(path.string() + ": plan is missing device '" + id + "'");
      return 0;
    }
    if (!build[id].is_boolean()) {
      errs.push_back(path.string() + ": plan entry '" + id + "' must be a boolean");
      return 0;
    }
    return build[id].get<bool>() ? 1 : 0;
  };
  for (const auto& u : c.dispatchable) p.du.push_back(pick(u.id));
  for (const auto& u : c.renewable) p.ndu.push_back(pick(u.id));
  for (const auto& u : c.storage) p.ess.push_back(pick(u.id));
  for (const auto& u : c.tidal) p.tpg.push_back(pick(u.id));
  for (auto it = build.begin(); it != build.end(); ++it)
    if (!known.contains(it.key()))
      errs.push_back(path.string() + ": plan names unknown device '" + it.key() + "'");
  if (!errs.empty()) throw ValidationError(errs);
  return p;
}

void write_schedule_csv(const std::filesystem::path& path, const TimeGrid& g,
                        const DeviceCatalog& c, const OperationSchedule& s,
                        const Series3& realized_load) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f << "year,day,hour,load_mw,shed_mw,water_t,water_slack_t";
  for (const auto& u : c.dispatchable) f << ",gen_" << u.id;
  for (const auto& u : c.renewable) f << ",gen_" << u.id;
  for (const auto& u : c.tidal) f << ",gen_" << u.id;
  for (const auto& u : c.storage) f << ",ch_" << u.id << ",dch_" << u.id << ",soc_" << u.id;
  f << "\n";
  for (int y = 0; y < g.years; ++y)
    for (int d = 0; d < g.days; ++d)
      for (int h = 0; h < g.hours_per_day; ++h) {
        f << (y + 1) << "," << (d + 1) << "," << (h + 1) << ","
          << num12(realized_load.at(y, d, h)) << "," << num12(s.shed_mw.at(y, d, h)) << ","
          << num12(s.water_t.at(y, d, h)) << ","
          << num12(s.water_slack_t[static_cast<std::size_t>(y * g.days + d)]);
        for (std::size_t i = 0; i < c.dispatchable.size(); ++i)
          f << "," << num12(s.du_gen_mw[i].at(y, d, h));
        for (std::size_t j = 0; j < c.renewable.size(); ++j)
          f << "," << num12(s.ndu_gen_mw[j].at(y, d, h));
        for (std::size_t k = 0; k < c.tidal.size(); ++k)
          f << "," << num12(s.tpg_gen_mw[k].at(y, d, h));
        for (std::size_t l = 0; l < c.storage.size(); ++l)
          f << "," << num12(s.ess_charge_mw[l].at(y, d, h)) << ","
            << num12(s.ess_discharge_mw[l].at(y, d, h)) << ","
            << num12(s.ess_soc_mwh[l].at(y, d, h));
        f << "\n";
      }
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

void write_costs_json(const std::filesystem::path& path, const CostSummary& s) {
  njson j;
  j["investment"] = s.investment;
  j["operation"] = s.operation;
  j["water_slack_penalty"] = s.slack_penalty;
  j["total"] = s.total;
  if (s.robust) {
    j["lower_bound"] = s.lb;
    j["upper_bound"] = s.ub;
    j["gap"] = s.gap;
    j["iterations"] = s.iterations;
    j["status"] = s.status;
  }
  if (s.with_shed) {
    j["total_shed_mw"] = s.total_shed_mw;
    j["water_slack_t"] = s.water_slack_t;
  }
  dump_file(path, j);
}

void write_trace_csv(const std::filesystem::path& path, const std::vector<CcgIterate>& trace) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f << "iteration,lower_bound,upper_bound,gap,worst_case_cost\n";
  for (const auto& it : trace)
    f << it.iter << "," << num12(it.lb) << "," << num12(it.ub) << "," << num12(it.gap) << ","
      << num12(it.worst_cost) << "\n";
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

void write_realization_json(const std::filesystem::path& path, const TimeGrid& g,
                            const DeviceCatalog& c, const Realization& r) {
  auto slots = [&](const Mask3& m) {
    njson out = njson::array();
    for (int y = 0; y < g.years; ++y)
      for (int d = 0; d < g.days; ++d)
        for (int h = 0; h < g.hours_per_day; ++h)
          if (m.at(y, d, h)) out.push_back({y + 1, d + 1, h + 1});
    return out;
  };
  njson j;
  j["load_up"] = slots(r.load_up);
  j["load_down"] = slots(r.load_down);
  njson up = njson::object(), down = njson::object();
  for (std::size_t k = 0; k < c.tidal.size(); ++k) {
    up[c.tidal[k].id] = slots(r.tpg_up[k]);
    down[c.tidal[k].id] = slots(r.tpg_down[k]);
  }
  j["tpg_up"] = up;
  j["tpg_down"] = down;
  dump_file(path, j);
}

void write_sweep_csv(const std::filesystem::path& path, const SweepResult& res) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  for (const auto& a : res.axes) f << a.param << ",";
  f << "ok,error,cost_inv,cost_ope,total,total_shed_mw,water_slack_t,"
       "installed_du_mw,installed_ndu_mw,installed_ess_mw,installed_tpg_mw,"
       "share_du,share_wind,share_solar,share_tpg,iterations\n";
  for (const auto& cell : res.cells) {
    for (const auto& [name, v] : cell.params) f << num12(v) << ",";
    f << (cell.ok ? "1" : "0") << "," << csv_quote(cell.error) << "," << num12(cell.cost_inv)
      << "," << num12(cell.cost_ope) << "," << num12(cell.total) << ","
      << num12(cell.total_shed_mw) << "," << num12(cell.water_slack_t) << ","
      << num12(cell.installed_du) << "," << num12(cell.installed_ndu) << ","
      << num12(cell.installed_ess) << "," << num12(cell.installed_tpg) << ","
      << num12(cell.shares.du) << "," << num12(cell.shares.wind) << ","
      << num12(cell.shares.solar) << "," << num12(cell.shares.tpg) << "," << cell.iterations
      << "\n";
  }
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

std::string fnv1a_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string());
  std::uint64_t h = 14695981039346656037ull;
  char buf[65536];
  while (f.read(buf, sizeof buf) || f.gcount() > 0) {
    for (std::streamsize i = 0; i < f.gcount(); ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 1099511628211ull;
    }
    if (!f) break;
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
  return out;
}

void write_manifest(const std::filesystem::path& out_dir, const RunConfig& rc,
                    const ManifestInfo& info) {
  njson j;
  j["command"] = info.command;
  j["inputs"] = {
      {"config", {{"path", rc.config_path.string()}, {"fnv1a64", fnv1a_file(rc.config_path)}}},
      {"catalog", {{"path", rc.catalog_path.string()}, {"fnv1a64", fnv1a_file(rc.catalog_path)}}},
      {"forecasts",
       {{"path", rc.forecasts_path.string()}, {"fnv1a64", fnv1a_file(rc.forecasts_path)}}}};
  j["config_echo"] = parse_file(rc.config_path);
  j["solver"] = {{"name", info.solver_name}, {"version", info.solver_version}};
  j["seed"] = info.seed;
  j["wall_seconds"] = info.wall_seconds;
  dump_file(out_dir / "manifest.json", j);
}

}  // namespace om::io
