#include "draim/aoi.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "draim/errors.hpp"
#include "draim/rng.hpp"

namespace draim {
namespace {

void check_set(const Scenario& s, const ParticipationSet& set) {
  if (set.universe() != s.vehicle_count()) {
    throw ValidationError("participation set covers " + std::to_string(set.universe()) +
                          " vehicles, scenario has " + std::to_string(s.vehicle_count()));
  }
}

double rate_unchecked(const Scenario& s, const ParticipationSet& set, std::size_t segment) {
  double rate = 0.0;
  for (std::size_t v : s.visitors(segment)) {
    if (set.contains(v)) rate += s.vehicles()[v].trip_rate;
  }
  return rate;
}

double trajectory_aoi_unchecked(const Scenario& s, const ParticipationSet& set,
                                std::size_t vehicle) {
  const Footprint& fp = s.footprint(vehicle);
  double weighted = 0.0;
  for (std::size_t k = 0; k < fp.segments.size(); ++k) {
    weighted += fp.dwell[k] * expected_segment_aoi(rate_unchecked(s, set, fp.segments[k]),
                                                   s.aoi_cap());
  }
  return weighted / fp.total_dwell;
}

double weighted_map_mean(const Scenario& s, const std::vector<double>& per_segment) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < per_segment.size(); ++k) {
    const double w = s.segments()[k].importance;
    num += w * per_segment[k];
    den += w;
  }
  return num / den;
}

// Integral of (t - last_reset) over [lo, hi] for the piece that started at
// `reset` and lasts until `next`.
double age_area(double reset, double next, double lo, double hi) {
  const double a = std::max(reset, lo);
  const double b = std::min(next, hi);
  if (b <= a) return 0.0;
  const double ea = a - reset;
  const double eb = b - reset;
  return 0.5 * (eb * eb - ea * ea);
}

}  // namespace

double segment_update_rate(const Scenario& s, const ParticipationSet& set, std::size_t segment) {
  check_set(s, set);
  s.check_segment(segment);
  return rate_unchecked(s, set, segment);
}

double expected_segment_aoi(double rate, double aoi_cap) {
  if (rate <= 0.0) return aoi_cap;
  return std::min(1.0 / rate, aoi_cap);
}

double trajectory_aoi(const Scenario& s, const ParticipationSet& set, std::size_t vehicle) {
  check_set(s, set);
  s.check_vehicle(vehicle);
  return trajectory_aoi_unchecked(s, set, vehicle);
}

double map_aoi(const Scenario& s, const ParticipationSet& set) {
  check_set(s, set);
  std::vector<double> per_segment(s.segment_count());
  for (std::size_t k = 0; k < per_segment.size(); ++k) {
    per_segment[k] = expected_segment_aoi(rate_unchecked(s, set, k), s.aoi_cap());
  }
  return weighted_map_mean(s, per_segment);
}

AoiReport aoi_report(const Scenario& s, const ParticipationSet& set) {
  check_set(s, set);
  AoiReport report;
  report.per_segment.resize(s.segment_count());
  for (std::size_t k = 0; k < report.per_segment.size(); ++k) {
    report.per_segment[k] = expected_segment_aoi(rate_unchecked(s, set, k), s.aoi_cap());
  }
  report.map_aoi = weighted_map_mean(s, report.per_segment);
  report.per_vehicle_trajectory_aoi.resize(s.vehicle_count());
  for (std::size_t i = 0; i < s.vehicle_count(); ++i) {
    report.per_vehicle_trajectory_aoi[i] = trajectory_aoi_unchecked(s, set, i);
  }
  return report;
}

SimResult simulate_aoi(const Scenario& s, const ParticipationSet& set, double horizon,
                       double warmup_fraction, std::uint64_t seed) {
  check_set(s, set);
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    throw ValidationError("simulate: horizon must be > 0");
  }
  if (!(warmup_fraction >= 0.0 && warmup_fraction < 1.0)) {
    throw ValidationError("simulate: warmup_fraction must be in [0, 1)");
  }

  // Trip epochs per participant, each from its own stream.
  std::vector<std::vector<double>> epochs(s.vehicle_count());
  for (std::size_t v : set.indices()) {
    SplitMix64 rng(derive_stream_seed(seed, v));
    const double rate = s.vehicles()[v].trip_rate;
    double t = rng.exponential(rate);
    while (t <= horizon) {
      epochs[v].push_back(t);
      t += rng.exponential(rate);
    }
  }

  SimResult result;
  result.horizon = horizon;
  result.warmup = warmup_fraction * horizon;
  result.seed = seed;
  result.per_segment_empirical_age.resize(s.segment_count());

  const double lo = result.warmup;
  std::vector<double> resets;
  for (std::size_t k = 0; k < s.segment_count(); ++k) {
    resets.clear();
    for (std::size_t v : s.visitors(k)) {
      if (set.contains(v)) resets.insert(resets.end(), epochs[v].begin(), epochs[v].end());
    }
    std::sort(resets.begin(), resets.end());
    double area = 0.0;
    double last = 0.0;
    for (double t : resets) {
      area += age_area(last, t, lo, horizon);
      last = t;
    }
    area += age_area(last, horizon, lo, horizon);
    result.per_segment_empirical_age[k] = area / (horizon - lo);
  }
  return result;
}

}  // namespace draim
