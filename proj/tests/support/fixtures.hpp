#pragma once

// Hand-built instances and from-scratch reference computations shared by the
// unit and acceptance suites. The reference functions re-derive quantities
// straight from the raw scenario data and never call the library's AoI or
// payoff code.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "draim/participation.hpp"
#include "draim/rng.hpp"
#include "draim/scenario.hpp"

namespace fixtures {

// Two identical vehicles on one segment: lambda = 1, c = 0.9, v = 1, linear
// utility, cap 10, company weight 1.
inline draim::Scenario symmetric_pair(double company_weight = 1.0) {
  draim::ScenarioData d;
  d.road_map.segments = {{"s1", 1.0}};
  d.vehicles = {{"1", 0.9, 1.0, 1.0, {{{"s1", 1.0}}}}, {"2", 0.9, 1.0, 1.0, {{{"s1", 1.0}}}}};
  d.aoi_cap = 10.0;
  d.company_weight = company_weight;
  return draim::Scenario(d);
}

// One vehicle, c = 1.2, v = 1, lambda = 1, single segment.
inline draim::Scenario single_costly_vehicle() {
  draim::ScenarioData d;
  d.road_map.segments = {{"s1", 1.0}};
  d.vehicles = {{"1", 1.2, 1.0, 1.0, {{{"s1", 1.0}}}}};
  d.aoi_cap = 10.0;
  d.company_weight = 1.0;
  return draim::Scenario(d);
}

inline draim::ParticipationSet set_of(const draim::Scenario& s,
                                      std::initializer_list<std::size_t> members) {
  draim::ParticipationSet set(s.vehicle_count());
  for (std::size_t i : members) set.insert(i);
  return set;
}

inline draim::ParticipationSet random_subset(std::size_t n, draim::SplitMix64& rng) {
  draim::ParticipationSet set(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.below(2)) set.insert(i);
  }
  return set;
}

// Small random instance for property tests; varies every generator knob.
inline draim::GenConfig random_config(std::uint64_t seed, int max_vehicles = 10) {
  draim::SplitMix64 rng(seed * 0x9E3779B97F4A7C15ULL + 17);
  draim::GenConfig cfg;
  cfg.seed = seed;
  cfg.n_vehicles = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_vehicles)));
  cfg.grid_side = 1 + static_cast<int>(rng.below(4));
  cfg.walk_length = 1 + static_cast<int>(rng.below(7));
  const double c0 = rng.uniform(0.0, 1.5);
  cfg.cost_range = {c0, c0 + rng.uniform(0.0, 1.5)};
  const double v0 = rng.uniform(0.0, 1.5);
  cfg.value_range = {v0, v0 + rng.uniform(0.0, 1.5)};
  const double r0 = rng.uniform(0.2, 1.5);
  cfg.rate_range = {r0, r0 + rng.uniform(0.0, 1.5)};
  cfg.aoi_cap = rng.uniform(1.0, 10.0);
  cfg.company_weight = rng.uniform(0.0, 3.0);
  if (rng.below(3) == 0) cfg.utility = draim::UtilityFamily::hyperbolic(rng.uniform(0.2, 2.0));
  return cfg;
}

// ---- reference computations from raw data ----

inline double ref_rate(const draim::Scenario& s, const draim::ParticipationSet& set,
                       const std::string& segment) {
  double rate = 0.0;
  for (std::size_t i = 0; i < s.vehicle_count(); ++i) {
    if (!set.contains(i)) continue;
    const auto& visits = s.vehicles()[i].trajectory.visits;
    const bool touches = std::any_of(visits.begin(), visits.end(),
                                     [&](const draim::Visit& v) { return v.segment == segment; });
    if (touches) rate += s.vehicles()[i].trip_rate;
  }
  return rate;
}

inline double ref_segment_aoi(const draim::Scenario& s, const draim::ParticipationSet& set,
                              const std::string& segment) {
  const double rate = ref_rate(s, set, segment);
  return rate == 0.0 ? s.aoi_cap() : std::min(1.0 / rate, s.aoi_cap());
}

inline double ref_trajectory_aoi(const draim::Scenario& s, const draim::ParticipationSet& set,
                                 std::size_t vehicle) {
  double num = 0.0;
  double den = 0.0;
  for (const auto& visit : s.vehicles()[vehicle].trajectory.visits) {
    num += visit.dwell * ref_segment_aoi(s, set, visit.segment);
    den += visit.dwell;
  }
  return num / den;
}

inline double ref_map_aoi(const draim::Scenario& s, const draim::ParticipationSet& set) {
  double num = 0.0;
  double den = 0.0;
  for (const auto& seg : s.segments()) {
    num += seg.importance * ref_segment_aoi(s, set, seg.id);
    den += seg.importance;
  }
  return num / den;
}

}  // namespace fixtures
