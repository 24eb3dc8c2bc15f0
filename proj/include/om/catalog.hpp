#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "om/grid.hpp"

namespace om {

/// Candidate diesel-style unit: dispatchable between 0 and rated power.
struct DispatchableUnit {
  std::string id;
  double rated_power_mw = 0;    // RP_i
  double op_cost_per_mwh = 0;   // c_i, $/MWh
  double inv_cost_per_mw = 0;   // cc_i, annualized $/MW
};

enum class RenewableKind : std::uint8_t { Wind, Solar };

/// Candidate wind/PV unit. Output follows the availability forecast; the
/// levelized operation cost is zero.
struct RenewableUnit {
  std::string id;
  double rated_power_mw = 0;   // RP_j
  double inv_cost_per_mw = 0;  // cc_j, annualized $/MW
  RenewableKind kind = RenewableKind::Wind;
};

/// Candidate battery: power and energy ratings priced separately, one
/// round-trip efficiency applied on both charge and discharge.
struct StorageUnit {
  std::string id;
  double rated_power_mw = 0;    // RP_l
  double rated_energy_mwh = 0;  // RC_l
  double inv_cost_per_mw = 0;   // cp_l
  double inv_cost_per_mwh = 0;  // ce_l
  double efficiency = 0.9;      // eta_l, in (0, 1]
};

/// Candidate tidal barrage unit.
struct TidalUnit {
  std::string id;
  double rated_power_mw = 0;   // RP_k
  double inv_cost_per_mw = 0;  // cc_k
  double area_m2 = 0;          // A_k
  double efficiency = 0.9;     // eta_k
  double op_cost_per_mwh = 0;  // c_k, catalogues list "-" ⇒ 0
};

/// The compulsory desalination load. Not a candidate: always installed.
struct DesalinationUnit {
  double rated_capacity_tph = 0;  // RC_F, t per hour
  double inv_cost_per_year = 0;   // cc_F, annualized $
  double op_cost_per_ton = 0;     // c_F, $/t
  double power_per_ton_mw = 0;    // alpha_F, MW per t/h
  double daily_demand_t = 0;      // F_0
};

struct EconomicParams {
  double discount_rate = 0.0;    // dr
  double shed_penalty = 1e6;     // nu, $/MWh of unserved load
  double sea_density = 1025.0;   // rho, kg/m^3
  double gravity = 9.81;         // g, m/s^2
};

struct DeviceCatalog {
  std::vector<DispatchableUnit> dispatchable;
  std::vector<RenewableUnit> renewable;
  std::vector<TidalUnit> tidal;
  std::vector<StorageUnit> storage;
  DesalinationUnit desalination;

  int num_du() const { return static_cast<int>(dispatchable.size()); }
  int num_ndu() const { return static_cast<int>(renewable.size()); }
  int num_tpg() const { return static_cast<int>(tidal.size()); }
  int num_ess() const { return static_cast<int>(storage.size()); }
  int num_candidates() const { return num_du() + num_ndu() + num_tpg() + num_ess(); }

  /// Upper bound on installable generation capacity (DU + NDU + TPG).
  double total_generation_capacity() const {
    double s = 0;
    for (const auto& u : dispatchable) s += u.rated_power_mw;
    for (const auto& u : renewable) s += u.rated_power_mw;
    for (const auto& u : tidal) s += u.rated_power_mw;
    return s;
  }

  double max_op_cost() const {
    double c = desalination.op_cost_per_ton;
    for (const auto& u : dispatchable) c = std::max(c, u.op_cost_per_mwh);
    for (const auto& u : tidal) c = std::max(c, u.op_cost_per_mwh);
    return c;
  }

  /// Field-level sanity checks; returns one message per violated invariant.
  std::vector<std::string> validate() const;
};

/// Binary build decision per candidate, aligned with catalog order.
struct InvestmentPlan {
  std::vector<std::uint8_t> du, ndu, tpg, ess;

  static InvestmentPlan none(const DeviceCatalog& c) {
    return {std::vector<std::uint8_t>(c.dispatchable.size(), 0),
            std::vector<std::uint8_t>(c.renewable.size(), 0),
            std::vector<std::uint8_t>(c.tidal.size(), 0),
            std::vector<std::uint8_t>(c.storage.size(), 0)};
  }
  static InvestmentPlan all(const DeviceCatalog& c) {
    return {std::vector<std::uint8_t>(c.dispatchable.size(), 1),
            std::vector<std::uint8_t>(c.renewable.size(), 1),
            std::vector<std::uint8_t>(c.tidal.size(), 1),
            std::vector<std::uint8_t>(c.storage.size(), 1)};
  }

  bool covers(const DeviceCatalog& c) const {
    return du.size() == c.dispatchable.size() && ndu.size() == c.renewable.size() &&
           tpg.size() == c.tidal.size() && ess.size() == c.storage.size();
  }

  double installed_du_mw(const DeviceCatalog& c) const;
  double installed_ndu_mw(const DeviceCatalog& c) const;
  double installed_tpg_mw(const DeviceCatalog& c) const;
  double installed_ess_mw(const DeviceCatalog& c) const;

  /// Generation capacity counted by the adequacy constraint (DU + NDU + TPG).
  double adequacy_capacity_mw(const DeviceCatalog& c) const {
    return installed_du_mw(c) + installed_ndu_mw(c) + installed_tpg_mw(c);
  }

  friend bool operator==(const InvestmentPlan&, const InvestmentPlan&) = default;
};

/// Hourly input data: nominal load, per-NDU availability (already capped at
/// each unit's rated power) and tidal height.
struct ForecastSet {
  Series3 load_mw;
  std::vector<Series3> ndu_availability_mw;  // one per catalog NDU
  Series3 tidal_height_m;

  double max_load() const {
    double m = 0;
    for (double v : load_mw) m = std::max(m, v);
    return m;
  }

  std::vector<std::string> validate(const TimeGrid& g, const DeviceCatalog& c) const;
};

}  // namespace om
