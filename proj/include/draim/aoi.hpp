#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "draim/participation.hpp"
#include "draim/scenario.hpp"

namespace draim {

// Closed-form freshness of the map under a participation set.
//
// Each participant's trips are a Poisson process of rate trip_rate, and one
// trip refreshes every segment on the route at once. A segment's refreshes
// are the superposition of its visitors' processes, so its long-run average
// age is 1/rate, capped at aoi_cap (a never-refreshed segment sits at the cap).

struct AoiReport {
  std::vector<double> per_segment;                 // by segment index
  double map_aoi = 0.0;
  std::vector<double> per_vehicle_trajectory_aoi;  // by vehicle index
};

// Sum of trip rates of participants whose route touches the segment. Repeat
// visits within one trip do not multiply the rate.
double segment_update_rate(const Scenario& s, const ParticipationSet& set, std::size_t segment);

// min(1/rate, cap); cap when rate == 0.
double expected_segment_aoi(double rate, double aoi_cap);

// Dwell-weighted mean of segment AoI over the vehicle's route, evaluated under
// exactly `set` (the vehicle need not be a member).
double trajectory_aoi(const Scenario& s, const ParticipationSet& set, std::size_t vehicle);

// Importance-weighted mean of segment AoI over the whole map.
double map_aoi(const Scenario& s, const ParticipationSet& set);

AoiReport aoi_report(const Scenario& s, const ParticipationSet& set);

struct SimResult {
  std::vector<double> per_segment_empirical_age;  // by segment index
  double horizon = 0.0;
  double warmup = 0.0;  // absolute start of the measured window
  std::uint64_t seed = 0;
};

// Discrete-event check of the closed form. Participant k's trip epochs are
// drawn from SplitMix64(derive_stream_seed(seed, k)) as exponential gaps;
// ages start at 0 and grow at unit rate between resets. Returns the
// time-averaged age of each segment over [warmup_fraction*horizon, horizon].
SimResult simulate_aoi(const Scenario& s, const ParticipationSet& set, double horizon,
                       double warmup_fraction, std::uint64_t seed);

}  // namespace draim
