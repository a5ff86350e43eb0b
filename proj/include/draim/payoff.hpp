#pragma once

#include <cstddef>

#include "draim/participation.hpp"
#include "draim/scenario.hpp"

namespace draim {

// Uniform per-participant payment. Negative values are charges.
struct Reward {
  double value = 0.0;

  explicit Reward(double r);
  Reward() = default;
  bool operator==(const Reward&) const = default;
};

struct PayoffBreakdown {
  double usage_utility = 0.0;
  double cost = 0.0;
  double reward = 0.0;
  double total = 0.0;  // usage_utility - cost + reward

  bool operator==(const PayoffBreakdown&) const = default;
};

// f(a) with f(0) = 1, non-increasing. Linear: max(0, 1 - a/cap);
// Hyperbolic: a0 / (a0 + a).
double freshness_factor(const UtilityFamily& family, double aoi, double aoi_cap);

// value_i * f(trajectory AoI under `set`).
double usage_utility(const Scenario& s, const ParticipationSet& set, std::size_t vehicle);

// cost_i - usage utility with the vehicle contributing: the smallest reward
// that makes participation rational. Independent of whether `vehicle` is in
// `set`.
double marginal_cost(const Scenario& s, const ParticipationSet& set, std::size_t vehicle);

// Non-members get all-zero breakdowns: no service, no cost, no reward.
PayoffBreakdown vehicle_payoff(const Scenario& s, const ParticipationSet& set,
                               std::size_t vehicle, Reward r);

// -company_weight * map AoI - r * |set|.
double company_payoff(const Scenario& s, const ParticipationSet& set, Reward r);

}  // namespace draim
