#include "om/uncertainty.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace om {

namespace {

TimeGrid grid_of(const Series3& s) {
  TimeGrid g;
  g.hours_per_day = s.hours();
  g.days = s.days();
  g.years = s.years();
  return g;
}

void apply_deviation(Series3& out, const Series3& base, double beta, const Mask3& up,
                     const Mask3& down) {
  for (int y = 0; y < base.years(); ++y)
    for (int d = 0; d < base.days(); ++d)
      for (int h = 0; h < base.hours(); ++h) {
        const double factor = 1.0 + beta * up.at(y, d, h) - beta * down.at(y, d, h);
        out.at(y, d, h) = base.at(y, d, h) * factor;
      }
}

}  // namespace

bool UncertaintyConfig::deterministic() const {
  auto all_zero = [](const std::vector<double>& v) {
    for (double x : v)
      if (x != 0.0) return false;
    return true;
  };
  const bool load_off = beta_load == 0.0 || all_zero(gamma_load);
  const bool tpg_off = beta_tpg == 0.0 || all_zero(gamma_tpg);
  return load_off && tpg_off;
}

std::vector<std::string> UncertaintyConfig::validate(const TimeGrid& g) const {
  std::vector<std::string> errs;
  // beta = 1 is allowed: a down-deviation then zeroes the slot, which is
  // still a valid nonnegative load/bound
  if (!(beta_load >= 0 && beta_load <= 1))
    errs.push_back("uncertainty: beta_load must be in [0, 1], got " + std::to_string(beta_load));
  if (!(beta_tpg >= 0 && beta_tpg <= 1))
    errs.push_back("uncertainty: beta_tpg must be in [0, 1], got " + std::to_string(beta_tpg));
  auto check_gamma = [&](const std::vector<double>& v, const char* name) {
    if (v.empty() || (v.size() != 1 && static_cast<int>(v.size()) != g.years))
      errs.push_back(std::string("uncertainty: ") + name + " needs 1 or Y values");
    for (double x : v)
      if (!(x >= 0 && x <= 1))
        errs.push_back(std::string("uncertainty: ") + name + " values must be in [0, 1]");
  };
  check_gamma(gamma_load, "gamma_load");
  check_gamma(gamma_tpg, "gamma_tpg");
  if (std::abs(delta_t) > 4) errs.push_back("uncertainty: |delta_t| must be <= 4 hours");
  return errs;
}

Realization Realization::zeros(const TimeGrid& g, int num_tpg_units) {
  Realization r;
  r.load_up = Mask3(g);
  r.load_down = Mask3(g);
  r.tpg_up.assign(static_cast<std::size_t>(num_tpg_units), Mask3(g));
  r.tpg_down.assign(static_cast<std::size_t>(num_tpg_units), Mask3(g));
  return r;
}

bool Realization::any() const {
  auto nonzero = [](const Mask3& m) {
    for (auto v : m)
      if (v) return true;
    return false;
  };
  if (nonzero(load_up) || nonzero(load_down)) return true;
  for (const auto& m : tpg_up)
    if (nonzero(m)) return true;
  for (const auto& m : tpg_down)
    if (nonzero(m)) return true;
  return false;
}

int Realization::load_flag_count(int y) const {
  int n = 0;
  for (int d = 0; d < load_up.days(); ++d)
    for (int h = 0; h < load_up.hours(); ++h) n += load_up.at(y, d, h) + load_down.at(y, d, h);
  return n;
}

int Realization::tpg_flag_count(int k, int y) const {
  int n = 0;
  for (int d = 0; d < tpg_up[k].days(); ++d)
    for (int h = 0; h < tpg_up[k].hours(); ++h)
      n += tpg_up[k].at(y, d, h) + tpg_down[k].at(y, d, h);
  return n;
}

int Realization::tpg_flag_count(int y) const {
  int n = 0;
  for (std::size_t k = 0; k < tpg_up.size(); ++k) n += tpg_flag_count(static_cast<int>(k), y);
  return n;
}

std::vector<std::string> Realization::validate(const TimeGrid& g,
                                               const UncertaintyConfig& c) const {
  std::vector<std::string> errs;
  if (!load_up.matches(g) || !load_down.matches(g)) {
    errs.push_back("realization: load mask shape does not match grid");
    return errs;
  }
  if (tpg_up.size() != tpg_down.size()) {
    errs.push_back("realization: tpg mask unit counts differ");
    return errs;
  }
  for (const auto& m : tpg_up)
    if (!m.matches(g)) {
      errs.push_back("realization: tpg mask shape does not match grid");
      return errs;
    }
  for (const auto& m : tpg_down)
    if (!m.matches(g)) {
      errs.push_back("realization: tpg mask shape does not match grid");
      return errs;
    }

  for (int y = 0; y < g.years; ++y)
    for (int d = 0; d < g.days; ++d)
      for (int h = 0; h < g.hours_per_day; ++h) {
        if (load_up.at(y, d, h) > 1 || load_down.at(y, d, h) > 1 ||
            load_up.at(y, d, h) + load_down.at(y, d, h) > 1)
          errs.push_back("realization: load up+down > 1 at (y=" + std::to_string(y + 1) + ",d=" +
                         std::to_string(d + 1) + ",h=" + std::to_string(h + 1) + ")");
        for (std::size_t k = 0; k < tpg_up.size(); ++k)
          if (tpg_up[k].at(y, d, h) > 1 || tpg_down[k].at(y, d, h) > 1 ||
              tpg_up[k].at(y, d, h) + tpg_down[k].at(y, d, h) > 1)
            errs.push_back("realization: tpg up+down > 1 for unit " + std::to_string(k) +
                           " at (y=" + std::to_string(y + 1) + ",d=" + std::to_string(d + 1) +
                           ",h=" + std::to_string(h + 1) + ")");
      }

  for (int y = 0; y < g.years; ++y) {
    const int bl = budget(c.gamma_load_for(y), g);
    if (load_flag_count(y) > bl)
      errs.push_back("realization: load budget exceeded in year " + std::to_string(y + 1) + " (" +
                     std::to_string(load_flag_count(y)) + " > " + std::to_string(bl) + ")");
    const int bt = budget(c.gamma_tpg_for(y), g);
    if (c.tpg_budget_per_unit) {
      for (std::size_t k = 0; k < tpg_up.size(); ++k)
        if (tpg_flag_count(static_cast<int>(k), y) > bt)
          errs.push_back("realization: tpg budget exceeded for unit " + std::to_string(k) +
                         " in year " + std::to_string(y + 1));
    } else if (tpg_flag_count(y) > bt) {
      errs.push_back("realization: tpg budget exceeded in year " + std::to_string(y + 1) + " (" +
                     std::to_string(tpg_flag_count(y)) + " > " + std::to_string(bt) + ")");
    }
  }
  return errs;
}

int budget(double gamma, const TimeGrid& g) {
  if (!(gamma >= 0 && gamma <= 1)) throw std::invalid_argument("budget: gamma must be in [0, 1]");
  // Tiny nudge so a product like (1/3)*24 that is integral in exact
  // arithmetic does not floor one step low.
  return static_cast<int>(std::floor(gamma * g.days * g.hours_per_day + 1e-9));
}

Series3 realize_load(const Series3& forecast, const UncertaintyConfig& c, const Realization& r) {
  const TimeGrid g = grid_of(forecast);
  if (auto errs = r.validate(g, c); !errs.empty())
    throw std::invalid_argument("realize_load: " + errs.front());
  Series3 out(forecast.hours(), forecast.days(), forecast.years());
  apply_deviation(out, forecast, c.beta_load, r.load_up, r.load_down);
  return out;
}

std::vector<Series3> realize_tpg(const std::vector<Series3>& nominal, const UncertaintyConfig& c,
                                 const Realization& r) {
  if (nominal.size() != r.tpg_up.size())
    throw std::invalid_argument("realize_tpg: unit count mismatch");
  std::vector<Series3> out;
  out.reserve(nominal.size());
  for (std::size_t k = 0; k < nominal.size(); ++k) {
    const TimeGrid g = grid_of(nominal[k]);
    if (auto errs = r.validate(g, c); !errs.empty())
      throw std::invalid_argument("realize_tpg: " + errs.front());
    Series3 s(nominal[k].hours(), nominal[k].days(), nominal[k].years());
    apply_deviation(s, nominal[k], c.beta_tpg, r.tpg_up[k], r.tpg_down[k]);
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

// Saturating count of sum_{m=0..budget} C(n,m) * 2^m.
std::uint64_t signed_subset_count(int n, int budget, std::uint64_t cap) {
  __uint128_t total = 0;
  __uint128_t binom = 1;  // C(n, 0)
  __uint128_t pow2 = 1;
  for (int m = 0; m <= budget && m <= n; ++m) {
    total += binom * pow2;
    if (total > cap) return cap + 1;
    binom = binom * static_cast<unsigned>(n - m) / static_cast<unsigned>(m + 1);
    pow2 *= 2;
  }
  return static_cast<std::uint64_t>(total);
}

struct SlotRef {
  int k;  // tidal unit, -1 for load slots
  int d, h;
};

// Enumerates sign patterns over subsets of `slots` with at most `budget`
// flags, writing into the up/down masks selected by `pick`, then calls
// `next` for every pattern (including the empty one).
template <typename PickMask, typename Next>
void enumerate_patterns(const std::vector<SlotRef>& slots, int budget, int year, PickMask&& pick,
                        Next&& next) {
  const int n = static_cast<int>(slots.size());
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(std::max(budget, 0)));

  // assign up/down to each chosen slot, then hand over
  auto signs = [&](auto&& self, std::size_t pos) -> void {
    if (pos == chosen.size()) {
      next();
      return;
    }
    const SlotRef& s = slots[static_cast<std::size_t>(chosen[pos])];
    for (int up = 0; up <= 1; ++up) {
      auto& mask = pick(s.k, up == 1);
      mask.at(year, s.d, s.h) = 1;
      self(self, pos + 1);
      mask.at(year, s.d, s.h) = 0;
    }
  };

  // grow subsets in lexicographic order; every subset within budget,
  // including the empty one, is visited exactly once
  auto walk = [&](auto&& self, int start, int room) -> void {
    signs(signs, 0);
    if (room == 0) return;
    for (int i = start; i < n; ++i) {
      chosen.push_back(i);
      self(self, i + 1, room - 1);
      chosen.pop_back();
    }
  };
  walk(walk, 0, std::max(budget, 0));
}

}  // namespace

std::uint64_t realization_count(const TimeGrid& g, const UncertaintyConfig& c, int num_tpg_units,
                                UncertaintyRestriction restriction) {
  const bool do_load = restriction != UncertaintyRestriction::TpgOnly;
  const bool do_tpg = restriction != UncertaintyRestriction::LoadOnly && num_tpg_units > 0;
  const std::uint64_t cap_guard = ~std::uint64_t{0} >> 1;
  __uint128_t total = 1;
  for (int y = 0; y < g.years; ++y) {
    if (do_load) {
      total *= signed_subset_count(g.days * g.hours_per_day, budget(c.gamma_load_for(y), g),
                                   cap_guard);
      if (total > cap_guard) return cap_guard;
    }
    if (do_tpg) {
      const int bt = budget(c.gamma_tpg_for(y), g);
      if (c.tpg_budget_per_unit) {
        for (int k = 0; k < num_tpg_units; ++k) {
          total *= signed_subset_count(g.days * g.hours_per_day, bt, cap_guard);
          if (total > cap_guard) return cap_guard;
        }
      } else {
        total *= signed_subset_count(num_tpg_units * g.days * g.hours_per_day, bt, cap_guard);
        if (total > cap_guard) return cap_guard;
      }
    }
  }
  return static_cast<std::uint64_t>(total);
}

void for_each_realization(const TimeGrid& g, const UncertaintyConfig& c, int num_tpg_units,
                          UncertaintyRestriction restriction,
                          const std::function<void(const Realization&)>& visit,
                          std::uint64_t cap) {
  const std::uint64_t count = realization_count(g, c, num_tpg_units, restriction);
  if (count > cap)
    throw std::runtime_error("enumerate_realizations: " + std::to_string(count) +
                             " realizations exceed the cap of " + std::to_string(cap));

  Realization r = Realization::zeros(g, num_tpg_units);
  const bool do_load = restriction != UncertaintyRestriction::TpgOnly;
  const bool do_tpg = restriction != UncertaintyRestriction::LoadOnly && num_tpg_units > 0;

  std::vector<SlotRef> load_slots, tpg_slots;
  for (int d = 0; d < g.days; ++d)
    for (int h = 0; h < g.hours_per_day; ++h) load_slots.push_back({-1, d, h});
  for (int k = 0; k < num_tpg_units; ++k)
    for (int d = 0; d < g.days; ++d)
      for (int h = 0; h < g.hours_per_day; ++h) tpg_slots.push_back({k, d, h});

  // Nested per-year enumeration: load pattern x tpg pattern x next year.
  auto year_level = [&](auto&& self, int y) -> void {
    if (y == g.years) {
      visit(r);
      return;
    }
    auto tpg_level = [&]() {
      if (!do_tpg) {
        self(self, y + 1);
        return;
      }
      const int bt = budget(c.gamma_tpg_for(y), g);
      auto pick_tpg = [&](int k, bool up) -> Mask3& { return up ? r.tpg_up[k] : r.tpg_down[k]; };
      if (c.tpg_budget_per_unit) {
        // chain the per-unit enumerations
        auto unit_level = [&](auto&& unit_self, int k) -> void {
          if (k == num_tpg_units) {
            self(self, y + 1);
            return;
          }
          std::vector<SlotRef> unit_slots;
          for (const auto& s : tpg_slots)
            if (s.k == k) unit_slots.push_back(s);
          enumerate_patterns(unit_slots, bt, y, pick_tpg, [&] { unit_self(unit_self, k + 1); });
        };
        unit_level(unit_level, 0);
      } else {
        enumerate_patterns(tpg_slots, bt, y, pick_tpg, [&] { self(self, y + 1); });
      }
    };
    if (do_load) {
      const int bl = budget(c.gamma_load_for(y), g);
      auto pick_load = [&](int, bool up) -> Mask3& { return up ? r.load_up : r.load_down; };
      enumerate_patterns(load_slots, bl, y, pick_load, tpg_level);
    } else {
      tpg_level();
    }
  };
  year_level(year_level, 0);
}

std::vector<Realization> enumerate_realizations(const TimeGrid& g, const UncertaintyConfig& c,
                                                int num_tpg_units,
                                                UncertaintyRestriction restriction,
                                                std::uint64_t cap) {
  std::vector<Realization> out;
  for_each_realization(g, c, num_tpg_units, restriction,
                       [&](const Realization& r) { out.push_back(r); }, cap);
  return out;
}

}  // namespace om
