#include "draim/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "draim/aoi.hpp"
#include "draim/errors.hpp"
#include "draim/payoff.hpp"
#include "draim/report_json.hpp"
#include "draim/stackelberg.hpp"

namespace draim {

const char* to_string(FamilyLabel f) {
  switch (f) {
    case FamilyLabel::NarrowCostCovered:
      return "NarrowCostCovered";
    case FamilyLabel::WideCost:
      return "WideCost";
    case FamilyLabel::CostExceedsValue:
      return "CostExceedsValue";
  }
  return "?";
}

std::optional<FamilyLabel> parse_family(std::string_view name) {
  for (FamilyLabel f : {FamilyLabel::NarrowCostCovered, FamilyLabel::WideCost,
                        FamilyLabel::CostExceedsValue}) {
    if (name == to_string(f)) return f;
  }
  if (name == "narrow-cost-covered") return FamilyLabel::NarrowCostCovered;
  if (name == "wide-cost") return FamilyLabel::WideCost;
  if (name == "cost-exceeds-value") return FamilyLabel::CostExceedsValue;
  return std::nullopt;
}

void validate(const FamilyConfig& f) {
  validate(f.base);
  if (f.sizes.empty()) throw ValidationError("family: sizes must be non-empty");
  for (int n : f.sizes) {
    if (n <= 0) throw ValidationError("family: population sizes must be > 0");
  }
  if (f.seeds.empty()) throw ValidationError("family: seeds must be non-empty");
  const Interval& cost = f.base.cost_range;
  switch (f.label) {
    case FamilyLabel::NarrowCostCovered:
      if (cost.hi - cost.lo > 0.1 * 0.5 * (cost.lo + cost.hi)) {
        throw ValidationError(
            "family NarrowCostCovered: cost_range width must be <= 10% of its midpoint");
      }
      break;
    case FamilyLabel::CostExceedsValue:
      if (!(cost.lo > f.base.value_range.hi)) {
        throw ValidationError(
            "family CostExceedsValue: cost_range lower bound must exceed value_range upper "
            "bound");
      }
      break;
    case FamilyLabel::WideCost:
      break;
  }
}

std::vector<std::uint64_t> default_seeds() {
  std::vector<std::uint64_t> seeds(20);
  for (std::size_t k = 0; k < seeds.size(); ++k) seeds[k] = k + 1;
  return seeds;
}

FamilyConfig default_family(FamilyLabel label) {
  FamilyConfig f;
  f.label = label;
  f.sizes = kDefaultSizes;
  f.seeds = default_seeds();
  GenConfig& g = f.base;
  g.company_weight = 1.0;
  switch (label) {
    case FamilyLabel::NarrowCostCovered:
      // Dense overlap on a 3x3 map: every route is shared, so full
      // participation covers costs and marginal costs stay close together.
      g.grid_side = 3;
      g.walk_length = 6;
      g.aoi_cap = 2.0;
      g.cost_range = {1.0, 1.02};
      g.value_range = {2.0, 2.0};
      g.rate_range = {1.0, 1.0};
      break;
    case FamilyLabel::WideCost:
      g.grid_side = 4;
      g.walk_length = 6;
      g.aoi_cap = 10.0;
      g.cost_range = {0.2, 3.0};
      g.value_range = {1.0, 2.0};
      g.rate_range = {0.5, 1.5};
      break;
    case FamilyLabel::CostExceedsValue:
      g.grid_side = 3;
      g.walk_length = 4;
      g.aoi_cap = 2.0;
      g.company_weight = 5.0;
      g.cost_range = {1.1, 1.3};
      g.value_range = {0.9, 1.0};
      g.rate_range = {0.8, 1.2};
      break;
  }
  return f;
}

std::vector<SweepRecord> population_sweep(const FamilyConfig& f) {
  validate(f);
  std::vector<SweepRecord> out;
  out.reserve(f.sizes.size() * f.seeds.size());
  for (std::uint64_t seed : f.seeds) {
    for (int n : f.sizes) {
      GenConfig cfg = f.base;
      cfg.n_vehicles = n;
      cfg.seed = seed;
      try {
        const Scenario s = generate_scenario(cfg);
        const StackelbergSolution sol = optimal_reward_sweep(s);
        SweepRecord rec;
        rec.n_vehicles = n;
        rec.seed = seed;
        rec.r_star = sol.r_star.value;
        rec.set_size = sol.set_star.count();
        rec.participation_fraction =
            static_cast<double>(rec.set_size) / static_cast<double>(n);
        rec.company_payoff = sol.company_payoff;
        rec.map_aoi_at_optimum = map_aoi(s, sol.set_star);
        out.push_back(rec);
      } catch (const ValidationError& e) {
        throw ValidationError("n=" + std::to_string(n) + " seed=" + std::to_string(seed) +
                              ": " + e.what());
      }
    }
  }
  return out;
}

MonotoneVerdict check_monotone(const std::vector<double>& series, Direction dir,
                               double tolerance) {
  if (series.empty()) throw ValidationError("check_monotone: series must be non-empty");
  for (std::size_t i = 1; i < series.size(); ++i) {
    const double step = series[i] - series[i - 1];
    const double excess = dir == Direction::NonIncreasing ? step : -step;
    if (excess > tolerance) return {false, i, excess};
  }
  return {};
}

ObservationReport observation_report(const FamilyConfig& f, double tolerance) {
  ObservationReport report;
  report.family = f.label;
  report.sizes = f.sizes;
  report.tolerance = tolerance;
  report.records = population_sweep(f);

  const std::size_t m = f.sizes.size();
  const int largest = *std::max_element(f.sizes.begin(), f.sizes.end());
  for (std::size_t k = 0; k < f.seeds.size(); ++k) {
    SeedVerdict v;
    v.seed = f.seeds[k];
    for (std::size_t j = 0; j < m; ++j) {
      const SweepRecord& rec = report.records[k * m + j];
      v.r_star.push_back(rec.r_star);
      v.fraction.push_back(rec.participation_fraction);
      v.payoff.push_back(rec.company_payoff);
    }

    GenConfig cfg = f.base;
    cfg.n_vehicles = largest;
    cfg.seed = v.seed;
    const Scenario big = generate_scenario(cfg);
    const auto everyone = ParticipationSet::full(big.vehicle_count());
    v.full_participation_covers_costs = true;
    for (std::size_t i = 0; i < big.vehicle_count(); ++i) {
      if (usage_utility(big, everyone, i) < big.vehicles()[i].cost) {
        v.full_participation_covers_costs = false;
        break;
      }
    }

    v.reward_monotone = check_monotone(v.r_star, Direction::NonIncreasing, tolerance);

    const double peak = *std::max_element(v.fraction.begin(), v.fraction.end());
    for (std::size_t j = 0; j < m; ++j) {
      if (v.fraction[j] == peak) v.decline_start = j;
    }
    v.participation_declines = v.fraction.back() < peak;
    const std::vector<double> tail(v.r_star.begin() + static_cast<std::ptrdiff_t>(v.decline_start),
                                   v.r_star.end());
    v.reward_over_decline = check_monotone(tail, Direction::NonIncreasing, tolerance);
    if (!v.reward_over_decline.ok) v.reward_over_decline.first_violation += v.decline_start;

    v.all_rewards_positive =
        std::all_of(v.r_star.begin(), v.r_star.end(), [](double r) { return r > 0.0; });
    v.payoff_declines =
        v.payoff.back() < *std::max_element(v.payoff.begin(), v.payoff.end());

    v.obs1 = v.reward_monotone.ok;
    v.obs2 = v.participation_declines && v.reward_over_decline.ok;
    v.obs3 = v.all_rewards_positive && v.payoff_declines;

    report.precondition_pass += v.full_participation_covers_costs ? 1 : 0;
    report.obs1_pass += v.obs1 ? 1 : 0;
    report.obs2_pass += v.obs2 ? 1 : 0;
    report.obs3_pass += v.obs3 ? 1 : 0;
    report.per_seed.push_back(std::move(v));
  }
  return report;
}

std::string sweep_csv(FamilyLabel family, const std::vector<SweepRecord>& records) {
  std::ostringstream out;
  out << kSweepCsvHeader << '\n';
  for (const SweepRecord& r : records) {
    out << to_string(family) << ',' << r.seed << ',' << r.n_vehicles << ','
        << format_number(r.r_star) << ',' << r.set_size << ','
        << format_number(r.participation_fraction) << ',' << format_number(r.company_payoff)
        << ',' << format_number(r.map_aoi_at_optimum) << '\n';
  }
  return out.str();
}

}  // namespace draim
