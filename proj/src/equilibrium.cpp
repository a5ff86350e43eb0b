#include "draim/equilibrium.hpp"

#include <algorithm>
#include <string>

#include "draim/errors.hpp"

namespace draim {

bool is_nash(const Scenario& s, const ParticipationSet& set, Reward r) {
  for (std::size_t i = 0; i < s.vehicle_count(); ++i) {
    const double m = marginal_cost(s, set, i);
    if (set.contains(i) ? r.value < m : r.value >= m) return false;
  }
  return true;
}

ParticipationSet remove_to_fixed_point(const Scenario& s, ParticipationSet start, Reward r,
                                       RemovalRule rule, std::size_t* rounds) {
  ParticipationSet set = std::move(start);
  std::size_t changed = 0;
  std::vector<std::size_t> drop;
  while (true) {
    drop.clear();
    for (std::size_t i : set.indices()) {
      const double m = marginal_cost(s, set, i);
      const bool leaves = rule == RemovalRule::AtReward ? r.value < m : r.value <= m;
      if (leaves) drop.push_back(i);
    }
    if (drop.empty()) break;
    for (std::size_t i : drop) set.erase(i);
    ++changed;
  }
  if (rounds) *rounds = changed;
  return set;
}

ParticipationSet accrete_to_fixed_point(const Scenario& s, ParticipationSet start, Reward r,
                                        std::size_t* rounds) {
  ParticipationSet set = std::move(start);
  std::size_t changed = 0;
  std::vector<std::size_t> add;
  while (true) {
    add.clear();
    for (std::size_t j = 0; j < s.vehicle_count(); ++j) {
      if (!set.contains(j) && r.value >= marginal_cost(s, set, j)) add.push_back(j);
    }
    if (add.empty()) break;
    for (std::size_t j : add) set.insert(j);
    ++changed;
  }
  if (rounds) *rounds = changed;
  return set;
}

EquilibriumOutcome make_outcome(const Scenario& s, ParticipationSet set, Reward r,
                                std::size_t rounds) {
  EquilibriumOutcome out;
  out.reward = r;
  out.per_vehicle.reserve(s.vehicle_count());
  for (std::size_t i = 0; i < s.vehicle_count(); ++i) {
    out.per_vehicle.push_back(vehicle_payoff(s, set, i, r));
  }
  out.certified = is_nash(s, set, r);
  out.rounds = rounds;
  out.set = std::move(set);
  return out;
}

EquilibriumOutcome largest_equilibrium(const Scenario& s, Reward r) {
  std::size_t rounds = 0;
  auto set = remove_to_fixed_point(s, ParticipationSet::full(s.vehicle_count()), r,
                                   RemovalRule::AtReward, &rounds);
  return make_outcome(s, std::move(set), r, rounds);
}

EquilibriumOutcome smallest_equilibrium(const Scenario& s, Reward r) {
  std::size_t rounds = 0;
  auto set = accrete_to_fixed_point(s, ParticipationSet::empty(s.vehicle_count()), r, &rounds);
  return make_outcome(s, std::move(set), r, rounds);
}

EquilibriumOutcome select_equilibrium(const Scenario& s, Reward r) {
  return s.equilibrium_selection() == EquilibriumSelection::Largest ? largest_equilibrium(s, r)
                                                                    : smallest_equilibrium(s, r);
}

std::vector<ParticipationSet> enumerate_equilibria(const Scenario& s, Reward r) {
  const std::size_t n = s.vehicle_count();
  if (n > kMaxEnumerationVehicles) {
    throw CapacityError("enumeration supports at most " +
                        std::to_string(kMaxEnumerationVehicles) + " vehicles, scenario has " +
                        std::to_string(n));
  }
  std::vector<ParticipationSet> found;
  const std::uint64_t profiles = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < profiles; ++bits) {
    ParticipationSet set(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (bits >> i & 1U) set.insert(i);
    }
    if (is_nash(s, set, r)) found.push_back(std::move(set));
  }
  std::sort(found.begin(), found.end(), canonical_less);
  return found;
}

}  // namespace draim
