#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace draim {

struct Segment {
  std::string id;
  double importance = 1.0;

  bool operator==(const Segment&) const = default;
};

struct RoadMap {
  std::vector<Segment> segments;

  bool operator==(const RoadMap&) const = default;
};

struct Visit {
  std::string segment;
  double dwell = 1.0;

  bool operator==(const Visit&) const = default;
};

struct Trajectory {
  std::vector<Visit> visits;

  bool operator==(const Trajectory&) const = default;
};

struct Vehicle {
  std::string id;
  double cost = 0.0;       // sensing cost per period
  double value = 0.0;      // usage utility of a perfectly fresh map
  double trip_rate = 1.0;  // trips per unit time
  Trajectory trajectory;

  bool operator==(const Vehicle&) const = default;
};

enum class UtilityKind { Linear, Hyperbolic };

struct UtilityFamily {
  UtilityKind kind = UtilityKind::Linear;
  double a0 = 1.0;  // only meaningful for Hyperbolic

  static UtilityFamily linear() { return {}; }
  static UtilityFamily hyperbolic(double a0) { return {UtilityKind::Hyperbolic, a0}; }

  bool operator==(const UtilityFamily& o) const {
    return kind == o.kind && (kind == UtilityKind::Linear || a0 == o.a0);
  }
};

enum class EquilibriumSelection { Largest, Smallest };

// Everything a scenario is built from. Plain data; Scenario validates it.
struct ScenarioData {
  RoadMap road_map;
  std::vector<Vehicle> vehicles;
  double aoi_cap = 10.0;
  double company_weight = 1.0;
  UtilityFamily utility;
  EquilibriumSelection equilibrium_selection = EquilibriumSelection::Largest;

  bool operator==(const ScenarioData&) const = default;
};

// Segments a vehicle's route touches, deduplicated in first-visit order, with
// dwell weights accumulated over repeats.
struct Footprint {
  std::vector<std::size_t> segments;
  std::vector<double> dwell;
  double total_dwell = 0.0;
};

// A validated, immutable game instance. Construction throws ValidationError
// naming the offending field and rule.
class Scenario {
 public:
  explicit Scenario(ScenarioData data);

  const ScenarioData& data() const { return data_; }
  const RoadMap& road_map() const { return data_.road_map; }
  const std::vector<Segment>& segments() const { return data_.road_map.segments; }
  const std::vector<Vehicle>& vehicles() const { return data_.vehicles; }
  std::size_t segment_count() const { return data_.road_map.segments.size(); }
  std::size_t vehicle_count() const { return data_.vehicles.size(); }
  double aoi_cap() const { return data_.aoi_cap; }
  double company_weight() const { return data_.company_weight; }
  const UtilityFamily& utility() const { return data_.utility; }
  EquilibriumSelection equilibrium_selection() const {
    return data_.equilibrium_selection;
  }

  std::size_t segment_index(std::string_view id) const;
  std::size_t vehicle_index(std::string_view id) const;
  const Footprint& footprint(std::size_t vehicle) const { return footprints_.at(vehicle); }
  // Vehicles whose route touches the segment, ascending by index.
  const std::vector<std::size_t>& visitors(std::size_t segment) const {
    return visitors_.at(segment);
  }

  void check_vehicle(std::size_t vehicle) const;
  void check_segment(std::size_t segment) const;

  bool operator==(const Scenario& o) const { return data_ == o.data_; }

 private:
  ScenarioData data_;
  std::unordered_map<std::string, std::size_t> segment_lookup_;
  std::unordered_map<std::string, std::size_t> vehicle_lookup_;
  std::vector<Footprint> footprints_;
  std::vector<std::vector<std::size_t>> visitors_;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

struct GenConfig {
  int grid_side = 4;
  int n_vehicles = 10;
  int walk_length = 6;
  Interval cost_range{0.5, 1.5};
  Interval value_range{0.5, 1.5};
  Interval rate_range{0.5, 1.5};
  std::uint64_t seed = 0;
  // Model parameters copied verbatim into the generated scenario.
  double aoi_cap = 10.0;
  double company_weight = 1.0;
  UtilityFamily utility;
  EquilibriumSelection equilibrium_selection = EquilibriumSelection::Largest;
};

void validate(const GenConfig& cfg);

// Deterministic instance generator.
//
// Segments are the g*g grid cells "s<row*g+col>" with importance 1. Vehicle k
// (0-based, id "v<k+1>") draws from SplitMix64(derive_stream_seed(seed, k)) in
// this order: cost, value, trip_rate (uniform on their ranges), start cell
// (below(g*g)), then walk_length-1 moves. Each move picks below(m) among the m
// in-grid neighbours listed as up, down, left, right; with g = 1 the walk
// stays put. Repeated cells accumulate dwell weight 1 per step; visits are
// kept in first-visit order. Vehicle k depends only on (seed, k), so a
// smaller population is a prefix of a larger one.
Scenario generate_scenario(const GenConfig& cfg);

// JSON ingestion. Throws ParseError on malformed JSON, ValidationError on
// schema or invariant violations.
Scenario load_scenario(std::string_view json_text);

// Canonical JSON: fixed key order, shortest round-trip numbers, 2-space indent.
std::string save_scenario(const Scenario& s);

const char* to_string(EquilibriumSelection sel);
const char* to_string(UtilityKind kind);

}  // namespace draim
