#pragma once

#include <cstddef>
#include <vector>

#include "draim/participation.hpp"
#include "draim/payoff.hpp"
#include "draim/scenario.hpp"

namespace draim {

// Stage II: every vehicle simultaneously decides whether to participate.
// Participation has positive externalities (each extra participant can only
// freshen other routes), so marginal costs are non-increasing in the set and
// the Nash equilibria form a lattice with a largest and a smallest element.

struct EquilibriumOutcome {
  Reward reward;
  ParticipationSet set;
  std::vector<PayoffBreakdown> per_vehicle;  // by vehicle index
  bool certified = false;
  std::size_t rounds = 0;  // batched best-response rounds that changed the set
};

// Members stay iff r >= m_i(S) (indifferent vehicles participate);
// non-members stay out iff r < m_j(S).
bool is_nash(const Scenario& s, const ParticipationSet& set, Reward r);

// Batched removal from the full set until every member is willing to stay.
EquilibriumOutcome largest_equilibrium(const Scenario& s, Reward r);

// Batched accretion from the empty set until no outsider wants in.
EquilibriumOutcome smallest_equilibrium(const Scenario& s, Reward r);

// Dispatches on the scenario's equilibrium_selection.
EquilibriumOutcome select_equilibrium(const Scenario& s, Reward r);

inline constexpr std::size_t kMaxEnumerationVehicles = 20;

// Every pure Nash equilibrium by exhaustive scan, in canonical order.
// Throws CapacityError above kMaxEnumerationVehicles.
std::vector<ParticipationSet> enumerate_equilibria(const Scenario& s, Reward r);

// Removal threshold used by the removal loop.
enum class RemovalRule {
  AtReward,        // drop i when r < m_i(S)
  JustBelowReward  // drop i when r <= m_i(S): the limit of r - eps as eps -> 0
};

// Runs batched removal starting from `start`. Returns the fixed point; `rounds`
// (if given) receives the number of rounds that removed someone.
ParticipationSet remove_to_fixed_point(const Scenario& s, ParticipationSet start, Reward r,
                                       RemovalRule rule, std::size_t* rounds = nullptr);

// Batched accretion starting from `start`.
ParticipationSet accrete_to_fixed_point(const Scenario& s, ParticipationSet start, Reward r,
                                        std::size_t* rounds = nullptr);

// Assembles breakdowns and the certification flag for a set.
EquilibriumOutcome make_outcome(const Scenario& s, ParticipationSet set, Reward r,
                                std::size_t rounds);

}  // namespace draim
