#include <cmath>

#include "doctest.h"
#include "draim/aoi.hpp"
#include "draim/errors.hpp"
#include "support/fixtures.hpp"

using namespace draim;

namespace {

// v1 (rate 1) visits s1; v2 (rate 0.5) visits s1 and s2; v3 (rate 2) visits s1
// three times; v4 (rate 2) visits s2; t (rate 1) rides s1 then s2 with dwell 1, 3.
Scenario rates_instance() {
  ScenarioData d;
  d.road_map.segments = {{"s1", 1.0}, {"s2", 1.0}, {"s3", 1.0}};
  d.vehicles = {
      {"v1", 0.0, 0.0, 1.0, {{{"s1", 1.0}}}},
      {"v2", 0.0, 0.0, 0.5, {{{"s1", 1.0}, {"s2", 1.0}}}},
      {"v3", 0.0, 0.0, 2.0, {{{"s1", 1.0}, {"s1", 1.0}, {"s1", 1.0}}}},
      {"v4", 0.0, 0.0, 2.0, {{{"s2", 1.0}}}},
      {"t", 0.0, 0.0, 1.0, {{{"s1", 1.0}, {"s2", 3.0}}}},
  };
  d.aoi_cap = 10.0;
  return Scenario(d);
}

}  // namespace

TEST_CASE("segment_update_rate sums visitor rates once per trip") {
  const Scenario s = rates_instance();
  CHECK(segment_update_rate(s, fixtures::set_of(s, {0, 1}), 0) == 1.5);
  CHECK(segment_update_rate(s, ParticipationSet::empty(5), 0) == 0.0);
  CHECK(segment_update_rate(s, fixtures::set_of(s, {2}), 0) == 2.0);
  CHECK_THROWS_AS(segment_update_rate(s, ParticipationSet::empty(5), 3), ValidationError);
  CHECK_THROWS_AS(segment_update_rate(s, ParticipationSet::empty(4), 0), ValidationError);
}

TEST_CASE("expected_segment_aoi is 1/rate capped") {
  CHECK(expected_segment_aoi(2.0, 10.0) == 0.5);
  CHECK(expected_segment_aoi(0.0, 10.0) == 10.0);
  CHECK(expected_segment_aoi(0.05, 10.0) == 10.0);
}

TEST_CASE("trajectory_aoi is the dwell-weighted mean over the route") {
  const Scenario s = rates_instance();
  // a(s1) = 1 from v1, a(s2) = 0.5 from v4.
  const auto set = fixtures::set_of(s, {0, 3});
  CHECK(trajectory_aoi(s, set, 4) == doctest::Approx(0.625).epsilon(1e-15));
  CHECK(trajectory_aoi(s, set, 0) == 1.0);
  CHECK(trajectory_aoi(s, ParticipationSet::empty(5), 4) == 10.0);
  CHECK_THROWS_AS(trajectory_aoi(s, set, 9), ValidationError);
}

TEST_CASE("map_aoi is the importance-weighted mean") {
  ScenarioData d;
  d.road_map.segments = {{"a", 1.0}, {"b", 1.0}, {"c", 1.0}};
  d.vehicles = {{"x", 0, 0, 2.0, {{{"a", 1.0}}}}, {"y", 0, 0, 1.0, {{{"b", 1.0}}}}};
  d.aoi_cap = 10.0;
  const Scenario s(d);
  CHECK(map_aoi(s, ParticipationSet::full(2)) == doctest::Approx(11.5 / 3.0).epsilon(1e-15));
  CHECK(map_aoi(s, ParticipationSet::empty(2)) == 10.0);

  d.road_map.segments = {{"a", 1.0}, {"b", 3.0}};
  d.vehicles = {{"x", 0, 0, 1.0, {{{"a", 1.0}}}}, {"y", 0, 0, 2.0, {{{"b", 1.0}}}}};
  CHECK(map_aoi(Scenario(d), ParticipationSet::full(2)) == doctest::Approx(0.625).epsilon(1e-15));
}

TEST_CASE("AoI report agrees with from-scratch recomputation") {
  SplitMix64 pick(1);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Scenario s = generate_scenario(fixtures::random_config(seed));
    const auto set = fixtures::random_subset(s.vehicle_count(), pick);
    const AoiReport r = aoi_report(s, set);
    for (std::size_t k = 0; k < s.segment_count(); ++k) {
      const double ref = fixtures::ref_segment_aoi(s, set, s.segments()[k].id);
      REQUIRE(r.per_segment[k] == doctest::Approx(ref).epsilon(1e-12));
      REQUIRE(r.per_segment[k] > 0.0);
      REQUIRE(r.per_segment[k] <= s.aoi_cap());
    }
    REQUIRE(r.map_aoi == doctest::Approx(fixtures::ref_map_aoi(s, set)).epsilon(1e-12));
    REQUIRE(r.map_aoi == doctest::Approx(map_aoi(s, set)).epsilon(1e-12));
    for (std::size_t i = 0; i < s.vehicle_count(); ++i) {
      const double traj = r.per_vehicle_trajectory_aoi[i];
      REQUIRE(traj == doctest::Approx(fixtures::ref_trajectory_aoi(s, set, i)).epsilon(1e-12));
      double lo = s.aoi_cap();
      double hi = 0.0;
      for (std::size_t seg : s.footprint(i).segments) {
        lo = std::min(lo, r.per_segment[seg]);
        hi = std::max(hi, r.per_segment[seg]);
      }
      REQUIRE(traj >= lo * (1 - 1e-12));
      REQUIRE(traj <= hi * (1 + 1e-12));
    }
  }
}

TEST_CASE("empty participation puts everything at the cap") {
  const Scenario s = generate_scenario(fixtures::random_config(3));
  const AoiReport r = aoi_report(s, ParticipationSet::empty(s.vehicle_count()));
  for (double a : r.per_segment) CHECK(a == s.aoi_cap());
  for (double a : r.per_vehicle_trajectory_aoi) CHECK(a == s.aoi_cap());
  CHECK(r.map_aoi == doctest::Approx(s.aoi_cap()).epsilon(1e-12));
}

TEST_CASE("AoI never increases when the participation set grows") {
  SplitMix64 pick(2);
  for (std::uint64_t seed = 200; seed < 300; ++seed) {
    const Scenario s = generate_scenario(fixtures::random_config(seed));
    const auto small = fixtures::random_subset(s.vehicle_count(), pick);
    auto large = small;
    for (std::size_t i = 0; i < s.vehicle_count(); ++i) {
      if (pick.below(2)) large.insert(i);
    }
    const AoiReport a = aoi_report(s, small);
    const AoiReport b = aoi_report(s, large);
    for (std::size_t k = 0; k < s.segment_count(); ++k) REQUIRE(b.per_segment[k] <= a.per_segment[k]);
    for (std::size_t i = 0; i < s.vehicle_count(); ++i) {
      REQUIRE(b.per_vehicle_trajectory_aoi[i] <= a.per_vehicle_trajectory_aoi[i]);
    }
    REQUIRE(b.map_aoi <= a.map_aoi);
  }
}

TEST_CASE("simulate_aoi with nobody participating grows linearly") {
  const Scenario s = rates_instance();
  for (double horizon : {100.0, 1e5}) {
    const SimResult r = simulate_aoi(s, ParticipationSet::empty(5), horizon, 0.0, 1);
    for (double age : r.per_segment_empirical_age) CHECK(age == horizon / 2);
    CHECK(r.warmup == 0.0);
  }
}

TEST_CASE("simulate_aoi matches 1/rate on a single refreshed segment") {
  const Scenario s = rates_instance();
  // v3 alone: s1 at rate 2.
  const SimResult r = simulate_aoi(s, fixtures::set_of(s, {2}), 1e5, 0.1, 2024);
  CHECK(r.warmup == doctest::Approx(1e4));
  CHECK(std::abs(r.per_segment_empirical_age[0] - 0.5) / 0.5 <= 0.02);
}

TEST_CASE("simulate_aoi tracks disjoint segments independently") {
  const Scenario s = rates_instance();
  // v1 refreshes s1 at rate 1, v4 refreshes s2 at rate 2, s3 stays stale.
  const SimResult r = simulate_aoi(s, fixtures::set_of(s, {0, 3}), 1e5, 0.1, 77);
  CHECK(std::abs(r.per_segment_empirical_age[0] - 1.0) <= 0.02);
  CHECK(std::abs(r.per_segment_empirical_age[1] - 0.5) / 0.5 <= 0.02);
  CHECK(r.per_segment_empirical_age[2] == doctest::Approx(0.55e5));
}

TEST_CASE("simulate_aoi is deterministic and validates its window") {
  const Scenario s = rates_instance();
  const auto set = fixtures::set_of(s, {0, 1});
  const SimResult a = simulate_aoi(s, set, 500.0, 0.2, 9);
  const SimResult b = simulate_aoi(s, set, 500.0, 0.2, 9);
  CHECK(a.per_segment_empirical_age == b.per_segment_empirical_age);
  CHECK_THROWS_AS(simulate_aoi(s, set, 0.0, 0.1, 9), ValidationError);
  CHECK_THROWS_AS(simulate_aoi(s, set, 10.0, 1.0, 9), ValidationError);
}
