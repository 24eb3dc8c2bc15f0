#pragma once

#include <random>

#include "om/catalog.hpp"
#include "om/grid.hpp"
#include "om/uncertainty.hpp"

namespace om::testing {

/// Self-contained instance small enough for exhaustive oracles.
struct Toy {
  DeviceCatalog cat;
  ForecastSet forecasts;
  TimeGrid grid;
  EconomicParams econ;
  UncertaintyConfig uncertainty;
};

/// One dispatchable unit, flat load, no water demand; the smallest sensible
/// instance.
Toy single_du_toy(int hours = 4, double load_mw = 1.0, double rated_mw = 6.0,
                  double op_cost = 100.0, double inv_cost = 44000.0);

/// Catalog slice picked by flags; hourly data filled deterministically from
/// the seed. Budgets are chosen so gamma * H is an exact integer in
/// {0, 1, 2}.
Toy random_toy(std::mt19937& rng, bool with_ess, bool with_tpg, bool with_ndu, bool with_water,
               int hours, int load_budget, int tpg_budget, double beta);

/// Deterministic pseudo-random toy suite for the acceptance criteria.
std::vector<Toy> acceptance_toys();

}  // namespace om::testing
