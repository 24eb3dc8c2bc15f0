#pragma once

#include "om/catalog.hpp"
#include "om/grid.hpp"
#include "om/schedule.hpp"

namespace om {

/// Present-worth factor 1/(1+dr)^(y-1) for year y >= 1.
double present_worth_factor(double discount_rate, int year);

/// Sum of present-worth factors over the horizon, i.e. the multiplier that
/// turns an annualized cost into its discounted total.
double horizon_discount_sum(double discount_rate, int years);

/// Discounted annualized investment cost of one candidate over the horizon,
/// per unit of x.
double du_investment_coefficient(const DispatchableUnit&, const TimeGrid&, const EconomicParams&);
double ndu_investment_coefficient(const RenewableUnit&, const TimeGrid&, const EconomicParams&);
double tpg_investment_coefficient(const TidalUnit&, const TimeGrid&, const EconomicParams&);
double ess_investment_coefficient(const StorageUnit&, const TimeGrid&, const EconomicParams&);

/// Discounted cost of the compulsory desalination unit; plan-independent.
double sdu_investment_constant(const DeviceCatalog&, const TimeGrid&, const EconomicParams&);

/// Total discounted investment cost of a plan, including the SDU constant.
double investment_cost(const DeviceCatalog&, const InvestmentPlan&, const TimeGrid&,
                       const EconomicParams&);

/// Operation cost: weighted sum over (y,d,h) of DU and TPG fuel, water
/// production and load-shedding penalty. Not discounted.
double operation_cost(const OperationSchedule&, const DeviceCatalog&, const EconomicParams&,
                      const TimeGrid&);

/// Penalty rate on the daily water shortfall slack, $/t. Chosen so that one
/// ton short always costs more than serving the equivalent energy as shed
/// load for a whole day.
double water_slack_penalty(const DeviceCatalog&, const EconomicParams&, const TimeGrid&);

}  // namespace om
