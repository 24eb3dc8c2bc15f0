#include "toys.hpp"

namespace om::testing {

namespace {

// catalog requires a desalination block even when the water demand is zero
DesalinationUnit idle_desal() { return {10.0, 0.0, 1.0, 0.005, 0.0}; }

}  // namespace

Toy single_du_toy(int hours, double load_mw, double rated_mw, double op_cost, double inv_cost) {
  Toy t;
  t.grid = {hours, 1, 1, {}};
  t.cat.dispatchable.push_back({"du1", rated_mw, op_cost, inv_cost});
  t.cat.desalination = idle_desal();
  t.econ = {0.0, 1e6, 1025.0, 9.81};
  t.forecasts.load_mw = Series3(t.grid, load_mw);
  t.forecasts.tidal_height_m = Series3(t.grid, 0.0);
  t.uncertainty = {};
  return t;
}

Toy random_toy(std::mt19937& rng, bool with_ess, bool with_tpg, bool with_ndu, bool with_water,
               int hours, int load_budget, int tpg_budget, double beta) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  Toy t;
  t.grid = {hours, 1, 1, {}};
  t.econ = {u01(rng) < 0.5 ? 0.0 : 0.1, 1e6, 1025.0, 9.81};

  t.cat.dispatchable.push_back(
      {"du1", 4.0 + 4.0 * u01(rng), 80.0 + 80.0 * u01(rng), 30000.0 + 40000.0 * u01(rng)});
  if (with_ess)
    t.cat.storage.push_back({"ess1", 1.0 + 2.0 * u01(rng), 3.0 + 4.0 * u01(rng),
                             20000.0 + 30000.0 * u01(rng), 20000.0 + 20000.0 * u01(rng), 0.9});
  if (with_tpg)
    t.cat.tidal.push_back(
        {"tp1", 2.0 + 3.0 * u01(rng), 40000.0 + 50000.0 * u01(rng), 3.0e5, 0.9, 0.0});
  if (with_ndu)
    t.cat.renewable.push_back({"wt1", 1.0 + 2.0 * u01(rng), 90000.0 + 60000.0 * u01(rng),
                               u01(rng) < 0.5 ? RenewableKind::Wind : RenewableKind::Solar});

  if (with_water) {
    const double cap = 5.0 + 10.0 * u01(rng);
    // keep the demand coverable within the day
    t.cat.desalination = {cap, 10000.0 * u01(rng), 0.5 + u01(rng), 0.004 + 0.004 * u01(rng),
                          cap * hours * (0.3 + 0.4 * u01(rng))};
  } else {
    t.cat.desalination = idle_desal();
  }

  // load that the full build can always carry
  const double lmax = t.cat.total_generation_capacity();
  t.forecasts.load_mw = Series3(t.grid);
  t.forecasts.tidal_height_m = Series3(t.grid);
  for (const auto& r : t.cat.renewable) {
    (void)r;
    t.forecasts.ndu_availability_mw.emplace_back(t.grid);
  }
  for (int h = 0; h < hours; ++h) {
    t.forecasts.load_mw.at(0, 0, h) = lmax * (0.2 + 0.55 * u01(rng));
    t.forecasts.tidal_height_m.at(0, 0, h) = 3.0 * u01(rng);
    for (std::size_t j = 0; j < t.cat.renewable.size(); ++j)
      t.forecasts.ndu_availability_mw[j].at(0, 0, h) =
          t.cat.renewable[j].rated_power_mw * u01(rng);
  }

  t.uncertainty.beta_load = beta;
  t.uncertainty.beta_tpg = beta;
  t.uncertainty.gamma_load = {static_cast<double>(load_budget) / hours};
  t.uncertainty.gamma_tpg = {with_tpg ? static_cast<double>(tpg_budget) / hours : 0.0};
  t.uncertainty.delta_t = 0;
  return t;
}

std::vector<Toy> acceptance_toys() {
  std::mt19937 rng(20240907);
  std::vector<Toy> toys;
  // at most two extras next to the mandatory DU so plans stay enumerable
  struct Mix {
    bool ess, tpg, ndu;
  };
  const Mix mixes[] = {{false, false, false}, {true, false, false}, {false, true, false},
                       {false, false, true},  {true, true, false},  {true, false, true},
                       {false, true, true}};
  // load-only uncertainty, varying budget and catalog mix
  for (int i = 0; i < 12; ++i) {
    const Mix m = mixes[i % 7];
    const int hours = 3 + static_cast<int>(rng() % 4);  // 3..6
    const int budget = static_cast<int>(rng() % 3);     // 0..2
    const double beta = (rng() % 2) ? 0.25 : 0.5;
    toys.push_back(random_toy(rng, m.ess, m.tpg, m.ndu, i % 3 == 1, hours, budget, 0, beta));
  }
  // joint load + tidal uncertainty on smaller grids
  for (int i = 0; i < 8; ++i) {
    const int hours = 2 + static_cast<int>(rng() % 3);   // 2..4
    const int budget = 1 + static_cast<int>(rng() % 2);  // 1..2
    const double beta = (rng() % 2) ? 0.25 : 0.5;
    toys.push_back(
        random_toy(rng, i % 2 == 1, true, false, i % 4 == 2, hours, budget, 1, beta));
  }
  return toys;
}

}  // namespace om::testing
