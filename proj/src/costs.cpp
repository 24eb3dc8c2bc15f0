#include "om/costs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace om {

double present_worth_factor(double discount_rate, int year) {
  if (discount_rate < 0.0) throw std::invalid_argument("present_worth_factor: dr must be >= 0");
  if (year < 1) throw std::invalid_argument("present_worth_factor: year index starts at 1");
  return 1.0 / std::pow(1.0 + discount_rate, year - 1);
}

double horizon_discount_sum(double discount_rate, int years) {
  double s = 0;
  for (int y = 1; y <= years; ++y) s += present_worth_factor(discount_rate, y);
  return s;
}

double du_investment_coefficient(const DispatchableUnit& u, const TimeGrid& g,
                                 const EconomicParams& e) {
  return horizon_discount_sum(e.discount_rate, g.years) * u.inv_cost_per_mw * u.rated_power_mw;
}

double ndu_investment_coefficient(const RenewableUnit& u, const TimeGrid& g,
                                  const EconomicParams& e) {
  return horizon_discount_sum(e.discount_rate, g.years) * u.inv_cost_per_mw * u.rated_power_mw;
}

double tpg_investment_coefficient(const TidalUnit& u, const TimeGrid& g,
                                  const EconomicParams& e) {
  return horizon_discount_sum(e.discount_rate, g.years) * u.inv_cost_per_mw * u.rated_power_mw;
}

double ess_investment_coefficient(const StorageUnit& u, const TimeGrid& g,
                                  const EconomicParams& e) {
  return horizon_discount_sum(e.discount_rate, g.years) *
         (u.inv_cost_per_mw * u.rated_power_mw + u.inv_cost_per_mwh * u.rated_energy_mwh);
}

double sdu_investment_constant(const DeviceCatalog& c, const TimeGrid& g,
                               const EconomicParams& e) {
  return horizon_discount_sum(e.discount_rate, g.years) * c.desalination.inv_cost_per_year;
}

double investment_cost(const DeviceCatalog& c, const InvestmentPlan& p, const TimeGrid& g,
                       const EconomicParams& e) {
  if (!p.covers(c)) throw std::invalid_argument("investment_cost: plan does not cover catalog");
  double total = sdu_investment_constant(c, g, e);
  for (std::size_t i = 0; i < c.dispatchable.size(); ++i)
    if (p.du[i]) total += du_investment_coefficient(c.dispatchable[i], g, e);
  for (std::size_t j = 0; j < c.renewable.size(); ++j)
    if (p.ndu[j]) total += ndu_investment_coefficient(c.renewable[j], g, e);
  for (std::size_t k = 0; k < c.tidal.size(); ++k)
    if (p.tpg[k]) total += tpg_investment_coefficient(c.tidal[k], g, e);
  for (std::size_t l = 0; l < c.storage.size(); ++l)
    if (p.ess[l]) total += ess_investment_coefficient(c.storage[l], g, e);
  return total;
}

double operation_cost(const OperationSchedule& s, const DeviceCatalog& c,
                      const EconomicParams& e, const TimeGrid& g) {
  if (!s.shed_mw.matches(g) || !s.water_t.matches(g))
    throw std::invalid_argument("operation_cost: schedule shape does not match grid");
  if (s.du_gen_mw.size() != c.dispatchable.size() || s.tpg_gen_mw.size() != c.tidal.size())
    throw std::invalid_argument("operation_cost: schedule device count does not match catalog");

  double total = 0;
  for (int y = 0; y < g.years; ++y)
    for (int d = 0; d < g.days; ++d) {
      const double w = g.weight(d);
      for (int h = 0; h < g.hours_per_day; ++h) {
        double hour = 0;
        for (std::size_t i = 0; i < c.dispatchable.size(); ++i)
          hour += c.dispatchable[i].op_cost_per_mwh * s.du_gen_mw[i].at(y, d, h);
        for (std::size_t k = 0; k < c.tidal.size(); ++k)
          hour += c.tidal[k].op_cost_per_mwh * s.tpg_gen_mw[k].at(y, d, h);
        hour += c.desalination.op_cost_per_ton * s.water_t.at(y, d, h);
        hour += e.shed_penalty * s.shed_mw.at(y, d, h);
        total += w * hour;
      }
    }
  return total;
}

double water_slack_penalty(const DeviceCatalog& c, const EconomicParams& e, const TimeGrid& g) {
  // scaled by the largest day weight so one ton short always costs more than
  // the weighted value of the energy it would have consumed
  double wmax = 1.0;
  for (double w : g.day_weights) wmax = std::max(wmax, w);
  return e.shed_penalty * c.desalination.power_per_ton_mw * g.hours_per_day * wmax;
}

}  // namespace om
