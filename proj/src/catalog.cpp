#include "om/catalog.hpp"

#include <cmath>
#include <set>

#include "om/schedule.hpp"

namespace om {

namespace {

void require(std::vector<std::string>& errs, bool ok, const std::string& msg) {
  if (!ok) errs.push_back(msg);
}

}  // namespace

std::vector<std::string> DeviceCatalog::validate() const {
  std::vector<std::string> errs;
  std::set<std::string> ids;
  auto check_id = [&](const std::string& id, const char* kind) {
    require(errs, !id.empty(), std::string(kind) + ": unit id must not be empty");
    require(errs, ids.insert(id).second, std::string(kind) + " '" + id + "': duplicate unit id");
  };

  for (const auto& u : dispatchable) {
    check_id(u.id, "dispatchable");
    require(errs, u.rated_power_mw > 0, "dispatchable '" + u.id + "': rated_power_mw must be > 0");
    require(errs, u.op_cost_per_mwh > 0, "dispatchable '" + u.id + "': op_cost_per_mwh must be > 0");
    require(errs, u.inv_cost_per_mw > 0, "dispatchable '" + u.id + "': inv_cost_per_mw must be > 0");
  }
  for (const auto& u : renewable) {
    check_id(u.id, "renewable");
    require(errs, u.rated_power_mw > 0, "renewable '" + u.id + "': rated_power_mw must be > 0");
    require(errs, u.inv_cost_per_mw > 0, "renewable '" + u.id + "': inv_cost_per_mw must be > 0");
  }
  for (const auto& u : tidal) {
    check_id(u.id, "tidal");
    require(errs, u.rated_power_mw > 0, "tidal '" + u.id + "': rated_power_mw must be > 0");
    require(errs, u.inv_cost_per_mw > 0, "tidal '" + u.id + "': inv_cost_per_mw must be > 0");
    require(errs, u.area_m2 > 0, "tidal '" + u.id + "': area_m2 must be > 0");
    require(errs, u.efficiency > 0 && u.efficiency <= 1,
            "tidal '" + u.id + "': efficiency must be in (0, 1]");
    require(errs, u.op_cost_per_mwh >= 0, "tidal '" + u.id + "': op_cost_per_mwh must be >= 0");
  }
  for (const auto& u : storage) {
    check_id(u.id, "storage");
    require(errs, u.rated_power_mw > 0, "storage '" + u.id + "': rated_power_mw must be > 0");
    require(errs, u.rated_energy_mwh > 0, "storage '" + u.id + "': rated_energy_mwh must be > 0");
    require(errs, u.inv_cost_per_mw > 0, "storage '" + u.id + "': inv_cost_per_mw must be > 0");
    require(errs, u.inv_cost_per_mwh > 0, "storage '" + u.id + "': inv_cost_per_mwh must be > 0");
    require(errs, u.efficiency > 0 && u.efficiency <= 1,
            "storage '" + u.id + "': efficiency must be in (0, 1]");
  }

  const auto& f = desalination;
  require(errs, f.rated_capacity_tph > 0, "desalination: rated_capacity_tph must be > 0");
  require(errs, f.power_per_ton_mw > 0, "desalination: power_per_ton_mw must be > 0");
  require(errs, f.daily_demand_t >= 0, "desalination: daily_demand_t must be >= 0");
  require(errs, f.op_cost_per_ton >= 0, "desalination: op_cost_per_ton must be >= 0");
  require(errs, f.inv_cost_per_year >= 0, "desalination: inv_cost_per_year must be >= 0");
  return errs;
}

namespace {
template <typename Units>
double installed(const Units& units, const std::vector<std::uint8_t>& x) {
  double s = 0;
  for (std::size_t n = 0; n < units.size(); ++n)
    if (x[n]) s += units[n].rated_power_mw;
  return s;
}
}  // namespace

double InvestmentPlan::installed_du_mw(const DeviceCatalog& c) const {
  return installed(c.dispatchable, du);
}
double InvestmentPlan::installed_ndu_mw(const DeviceCatalog& c) const {
  return installed(c.renewable, ndu);
}
double InvestmentPlan::installed_tpg_mw(const DeviceCatalog& c) const {
  return installed(c.tidal, tpg);
}
double InvestmentPlan::installed_ess_mw(const DeviceCatalog& c) const {
  return installed(c.storage, ess);
}

std::vector<std::string> ForecastSet::validate(const TimeGrid& g, const DeviceCatalog& c) const {
  std::vector<std::string> errs;
  if (!load_mw.matches(g)) errs.push_back("forecasts: load series shape does not match grid");
  if (!tidal_height_m.matches(g))
    errs.push_back("forecasts: tidal height series shape does not match grid");
  if (ndu_availability_mw.size() != c.renewable.size())
    errs.push_back("forecasts: need one availability series per renewable unit");
  for (std::size_t j = 0; j < ndu_availability_mw.size(); ++j)
    if (!ndu_availability_mw[j].matches(g))
      errs.push_back("forecasts: availability series " + std::to_string(j) +
                     " shape does not match grid");

  auto check_nonneg = [&](const Series3& s, const std::string& what) {
    if (!s.matches(g)) return;
    for (int y = 0; y < g.years; ++y)
      for (int d = 0; d < g.days; ++d)
        for (int h = 0; h < g.hours_per_day; ++h)
          if (!(s.at(y, d, h) >= 0) || std::isnan(s.at(y, d, h))) {
            errs.push_back("forecasts: " + what + " negative or NaN at (y=" + std::to_string(y + 1) +
                           ",d=" + std::to_string(d + 1) + ",h=" + std::to_string(h + 1) + ")");
            return;  // one message per series is enough
          }
  };
  check_nonneg(load_mw, "load");
  check_nonneg(tidal_height_m, "tidal height");
  for (std::size_t j = 0; j < ndu_availability_mw.size(); ++j)
    check_nonneg(ndu_availability_mw[j], "availability of NDU " + std::to_string(j));
  return errs;
}

OperationSchedule OperationSchedule::zeros(const DeviceCatalog& c, const TimeGrid& g) {
  OperationSchedule s;
  s.du_gen_mw.assign(c.dispatchable.size(), Series3(g));
  s.ndu_gen_mw.assign(c.renewable.size(), Series3(g));
  s.tpg_gen_mw.assign(c.tidal.size(), Series3(g));
  s.ess_charge_mw.assign(c.storage.size(), Series3(g));
  s.ess_discharge_mw.assign(c.storage.size(), Series3(g));
  s.ess_soc_mwh.assign(c.storage.size(), Series3(g));
  s.water_t = Series3(g);
  s.shed_mw = Series3(g);
  s.water_slack_t.assign(static_cast<std::size_t>(g.days) * g.years, 0.0);
  return s;
}

OperationSchedule::GenerationTotals OperationSchedule::generation_totals(
    const DeviceCatalog& c) const {
  GenerationTotals t;
  for (std::size_t i = 0; i < du_gen_mw.size(); ++i)
    for (double v : du_gen_mw[i]) t.du += v;
  for (std::size_t j = 0; j < ndu_gen_mw.size(); ++j) {
    double s = 0;
    for (double v : ndu_gen_mw[j]) s += v;
    (c.renewable[j].kind == RenewableKind::Wind ? t.wind : t.solar) += s;
  }
  for (std::size_t k = 0; k < tpg_gen_mw.size(); ++k)
    for (double v : tpg_gen_mw[k]) t.tpg += v;
  return t;
}

}  // namespace om
