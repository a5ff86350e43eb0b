#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "draim/scenario.hpp"

namespace draim {

enum class FamilyLabel { NarrowCostCovered, WideCost, CostExceedsValue };

const char* to_string(FamilyLabel f);
// Accepts the CamelCase label or its kebab-case form ("narrow-cost-covered").
std::optional<FamilyLabel> parse_family(std::string_view name);

struct FamilyConfig {
  FamilyLabel label = FamilyLabel::NarrowCostCovered;
  GenConfig base;  // n_vehicles and seed are overwritten per cell
  std::vector<int> sizes;
  std::vector<std::uint64_t> seeds;
};

// Checks the family's defining constraint on top of GenConfig validation.
// NarrowCostCovered: cost width <= 10% of its midpoint. CostExceedsValue:
// cost lower bound > value upper bound.
void validate(const FamilyConfig& f);

inline const std::vector<int> kDefaultSizes{2, 5, 10, 20, 50, 100};
std::vector<std::uint64_t> default_seeds();  // 1..20
FamilyConfig default_family(FamilyLabel label);

struct SweepRecord {
  int n_vehicles = 0;
  std::uint64_t seed = 0;
  double r_star = 0.0;
  std::size_t set_size = 0;
  double participation_fraction = 0.0;
  double company_payoff = 0.0;
  double map_aoi_at_optimum = 0.0;
};

// One record per (seed, n), ordered by seed then by position in `sizes`.
std::vector<SweepRecord> population_sweep(const FamilyConfig& f);

enum class Direction { NonIncreasing, NonDecreasing };

struct MonotoneVerdict {
  bool ok = true;
  std::size_t first_violation = 0;  // index i where series[i-1] -> series[i] breaks
  double magnitude = 0.0;           // size of the offending step beyond the direction
};

MonotoneVerdict check_monotone(const std::vector<double>& series, Direction dir,
                               double tolerance);

struct SeedVerdict {
  std::uint64_t seed = 0;
  std::vector<double> r_star;      // by size
  std::vector<double> fraction;    // by size
  std::vector<double> payoff;      // by size
  // Full participation at the largest size gives every vehicle usage utility
  // at least its cost.
  bool full_participation_covers_costs = false;
  MonotoneVerdict reward_monotone;       // r_star non-increasing in n
  bool participation_declines = false;   // fraction at largest n < its running max
  std::size_t decline_start = 0;         // last index attaining the maximum fraction
  MonotoneVerdict reward_over_decline;   // r_star non-increasing from decline_start on
  bool all_rewards_positive = false;
  bool payoff_declines = false;          // payoff at largest n < max over n
  bool obs1 = false;
  bool obs2 = false;
  bool obs3 = false;
};

struct ObservationReport {
  FamilyLabel family = FamilyLabel::NarrowCostCovered;
  std::vector<int> sizes;
  double tolerance = 0.0;
  std::vector<SeedVerdict> per_seed;
  std::vector<SweepRecord> records;
  std::size_t obs1_pass = 0;
  std::size_t obs2_pass = 0;
  std::size_t obs3_pass = 0;
  std::size_t precondition_pass = 0;
};

// Reports verdicts without asserting them; thresholds live with the caller.
ObservationReport observation_report(const FamilyConfig& f, double tolerance = 1e-9);

inline constexpr std::string_view kSweepCsvHeader =
    "family,seed,n_vehicles,r_star,set_size,participation_fraction,company_payoff,"
    "map_aoi_at_optimum";

std::string sweep_csv(FamilyLabel family, const std::vector<SweepRecord>& records);

}  // namespace draim
