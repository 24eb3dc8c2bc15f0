#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "om/catalog.hpp"
#include "om/grid.hpp"

namespace om {

/// Budget-uncertainty parameters. Deviation coefficients beta scale the
/// symmetric per-slot deviation; budget coefficients gamma (one value per
/// year, or a single broadcast value) bound how many slots may deviate.
struct UncertaintyConfig {
  double beta_load = 0.0;
  double beta_tpg = 0.0;
  std::vector<double> gamma_load{0.0};
  std::vector<double> gamma_tpg{0.0};
  int delta_t = 0;  // deterministic tidal-peak delay scenario, hours

  // One budget pool across all tidal units per year (single Gamma symbol);
  // switchable to a separate pool per unit.
  bool tpg_budget_per_unit = false;

  double gamma_load_for(int y) const {
    return gamma_load.size() == 1 ? gamma_load[0] : gamma_load.at(static_cast<std::size_t>(y));
  }
  double gamma_tpg_for(int y) const {
    return gamma_tpg.size() == 1 ? gamma_tpg[0] : gamma_tpg.at(static_cast<std::size_t>(y));
  }

  bool deterministic() const;

  std::vector<std::string> validate(const TimeGrid& g) const;
};

/// One point of the uncertainty set: up/down flags per load slot and per
/// (tidal unit, slot).
struct Realization {
  Mask3 load_up, load_down;
  std::vector<Mask3> tpg_up, tpg_down;

  static Realization zeros(const TimeGrid& g, int num_tpg_units);

  bool any() const;
  int load_flag_count(int y) const;          // flagged load slots in year y
  int tpg_flag_count(int y) const;           // flagged TPG slots in year y, all units
  int tpg_flag_count(int k, int y) const;    // flagged slots of unit k in year y

  /// Empty when the realization satisfies the pairing and budget rules.
  std::vector<std::string> validate(const TimeGrid& g, const UncertaintyConfig& c) const;

  friend bool operator==(const Realization&, const Realization&) = default;
};

/// Per-year flag budget floor(gamma * D * H). Products that are integral up
/// to roundoff are not pushed down a step.
int budget(double gamma, const TimeGrid& g);

/// Realized load L = L~ * (1 - beta*down + beta*up), elementwise.
Series3 realize_load(const Series3& forecast, const UncertaintyConfig& c, const Realization& r);

/// Realized TPG upper bound per unit, same deviation rule applied to the
/// nominal generation profile.
std::vector<Series3> realize_tpg(const std::vector<Series3>& nominal, const UncertaintyConfig& c,
                                 const Realization& r);

enum class UncertaintyRestriction : std::uint8_t { LoadOnly, TpgOnly, Both };

/// Number of realizations enumerate_realizations would visit.
std::uint64_t realization_count(const TimeGrid& g, const UncertaintyConfig& c, int num_tpg_units,
                                UncertaintyRestriction restriction);

inline constexpr std::uint64_t kDefaultEnumerationCap = 2'000'000;

/// Visit every realization of the budget sets exactly once. Throws when the
/// closed-form count exceeds `cap` (this is a desk-scale oracle).
void for_each_realization(const TimeGrid& g, const UncertaintyConfig& c, int num_tpg_units,
                          UncertaintyRestriction restriction,
                          const std::function<void(const Realization&)>& visit,
                          std::uint64_t cap = kDefaultEnumerationCap);

/// Materialized enumeration, in visit order.
std::vector<Realization> enumerate_realizations(const TimeGrid& g, const UncertaintyConfig& c,
                                                int num_tpg_units,
                                                UncertaintyRestriction restriction,
                                                std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace om
