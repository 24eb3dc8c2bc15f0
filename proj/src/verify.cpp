#include "om/verify.hpp"

#include <cmath>

namespace om {

namespace {

std::string idx(int y, int d, int h) {
  return "(y=" + std::to_string(y + 1) + ",d=" + std::to_string(d + 1) +
         ",h=" + std::to_string(h + 1) + ")";
}

std::string idx(const std::string& unit, int y, int d, int h) {
  return "(unit=" + unit + ",y=" + std::to_string(y + 1) + ",d=" + std::to_string(d + 1) +
         ",h=" + std::to_string(h + 1) + ")";
}

}  // namespace

std::vector<Violation> verify_schedule(const InvestmentPlan& plan,
                                       const OperationSchedule& s, const RealizedInputs& in,
                                       const DeviceCatalog& cat, const TimeGrid& g, double tol) {
  std::vector<Violation> out;
  auto flag = [&](const std::string& c, const std::string& where, double residual) {
    if (residual > tol) out.push_back({c, where, residual});
  };
  auto in_range = [&](const std::string& c, const std::string& where, double v, double lo,
                      double hi) {
    flag(c + "-lower", where, lo - v);
    flag(c + "-upper", where, v - hi);
  };

  const int H = g.hours_per_day;
  for (int y = 0; y < g.years; ++y)
    for (int d = 0; d < g.days; ++d) {
      for (int h = 0; h < H; ++h) {
        for (int i = 0; i < cat.num_du(); ++i)
          in_range("du-cap", idx(cat.dispatchable[i].id, y, d, h), s.du_gen_mw[i].at(y, d, h), 0,
                   cat.dispatchable[i].rated_power_mw * (plan.du[i] ? 1 : 0));
        for (int j = 0; j < cat.num_ndu(); ++j)
          in_range("ndu-cap", idx(cat.renewable[j].id, y, d, h), s.ndu_gen_mw[j].at(y, d, h), 0,
                   in.ndu_cap_mw[j].at(y, d, h) * (plan.ndu[j] ? 1 : 0));
        for (int k = 0; k < cat.num_tpg(); ++k)
          in_range("tpg-cap", idx(cat.tidal[k].id, y, d, h), s.tpg_gen_mw[k].at(y, d, h), 0,
                   in.tpg_cap_mw[k].at(y, d, h) * (plan.tpg[k] ? 1 : 0));
        for (int l = 0; l < cat.num_ess(); ++l) {
          const auto& u = cat.storage[l];
          const double on = plan.ess[l] ? 1 : 0;
          in_range("charge-cap", idx(u.id, y, d, h), s.ess_charge_mw[l].at(y, d, h), 0,
                   u.rated_power_mw * on);
          in_range("discharge-cap", idx(u.id, y, d, h), s.ess_discharge_mw[l].at(y, d, h), 0,
                   u.rated_power_mw * on);
          in_range("soc-cap", idx(u.id, y, d, h), s.ess_soc_mwh[l].at(y, d, h), 0,
                   u.rated_energy_mwh * on);
          // dynamics, with the cyclic constraint as the wrap of hour H-1
          const int hn = (h + 1) % H;
          const double soc_next = s.ess_soc_mwh[l].at(y, d, hn);
          const double expect = s.ess_soc_mwh[l].at(y, d, h) +
                                u.efficiency * s.ess_charge_mw[l].at(y, d, h) -
                                s.ess_discharge_mw[l].at(y, d, h) / u.efficiency;
          flag(hn == 0 ? "soc-cyclic" : "soc-dynamics", idx(u.id, y, d, h),
               std::abs(soc_next - expect));
        }
        in_range("water-cap", idx(y, d, h), s.water_t.at(y, d, h), 0,
                 cat.desalination.rated_capacity_tph);
        in_range("shed-cap", idx(y, d, h), s.shed_mw.at(y, d, h), 0, in.load_mw.at(y, d, h));

        double lhs = 0;
        for (int i = 0; i < cat.num_du(); ++i) lhs += s.du_gen_mw[i].at(y, d, h);
        for (int j = 0; j < cat.num_ndu(); ++j) lhs += s.ndu_gen_mw[j].at(y, d, h);
        for (int k = 0; k < cat.num_tpg(); ++k) lhs += s.tpg_gen_mw[k].at(y, d, h);
        for (int l = 0; l < cat.num_ess(); ++l)
          lhs += s.ess_discharge_mw[l].at(y, d, h) - s.ess_charge_mw[l].at(y, d, h);
        lhs += s.shed_mw.at(y, d, h);
        lhs -= cat.desalination.power_per_ton_mw * s.water_t.at(y, d, h);
        flag("balance", idx(y, d, h), std::abs(lhs - in.load_mw.at(y, d, h)));
      }

      double water = 0;
      for (int h = 0; h < H; ++h) water += s.water_t.at(y, d, h);
      const double slack =
          s.water_slack_t.empty() ? 0.0 : s.water_slack_t[static_cast<std::size_t>(y * g.days + d)];
      flag("water-slack-lower", idx(y, d, 0), -slack);
      flag("daily-water", "(y=" + std::to_string(y + 1) + ",d=" + std::to_string(d + 1) + ")",
           cat.desalination.daily_demand_t - water - slack);
    }
  return out;
}

}  // namespace om
