#include "draim/payoff.hpp"

#include <algorithm>
#include <cmath>

#include "draim/aoi.hpp"
#include "draim/errors.hpp"

namespace draim {

Reward::Reward(double r) : value(r) {
  if (!std::isfinite(r)) throw ValidationError("reward must be finite");
}

double freshness_factor(const UtilityFamily& family, double aoi, double aoi_cap) {
  switch (family.kind) {
    case UtilityKind::Linear:
      return std::max(0.0, 1.0 - aoi / aoi_cap);
    case UtilityKind::Hyperbolic:
      return family.a0 / (family.a0 + aoi);
  }
  return 0.0;
}

double usage_utility(const Scenario& s, const ParticipationSet& set, std::size_t vehicle) {
  const double aoi = trajectory_aoi(s, set, vehicle);
  return s.vehicles()[vehicle].value * freshness_factor(s.utility(), aoi, s.aoi_cap());
}

double marginal_cost(const Scenario& s, const ParticipationSet& set, std::size_t vehicle) {
  s.check_vehicle(vehicle);
  if (set.contains(vehicle)) {
    return s.vehicles()[vehicle].cost - usage_utility(s, set, vehicle);
  }
  ParticipationSet with = set;
  with.insert(vehicle);
  return s.vehicles()[vehicle].cost - usage_utility(s, with, vehicle);
}

PayoffBreakdown vehicle_payoff(const Scenario& s, const ParticipationSet& set,
                               std::size_t vehicle, Reward r) {
  s.check_vehicle(vehicle);
  if (!set.contains(vehicle)) return {};
  PayoffBreakdown out;
  out.usage_utility = usage_utility(s, set, vehicle);
  out.cost = s.vehicles()[vehicle].cost;
  out.reward = r.value;
  out.total = out.usage_utility - out.cost + out.reward;
  return out;
}

double company_payoff(const Scenario& s, const ParticipationSet& set, Reward r) {
  return -s.company_weight() * map_aoi(s, set) - r.value * static_cast<double>(set.count());
}

}  // namespace draim
