#include <string>

#include "doctest.h"
#include "draim/errors.hpp"
#include "draim/scenario.hpp"
#include "support/fixtures.hpp"

using namespace draim;

namespace {

const char* kMinimal = R"({
  "segments": [{"id": "s1", "importance": 1}],
  "vehicles": [{"id": "v1", "cost": 0.5, "value": 1, "trip_rate": 1,
                "trajectory": [{"segment": "s1", "dwell": 1}]}],
  "aoi_cap": 10,
  "company_weight": 1
})";

std::string with(const std::string& from, const std::string& to) {
  std::string doc = kMinimal;
  doc.replace(doc.find(from), from.size(), to);
  return doc;
}

std::string error_of(const std::string& doc) {
  try {
    load_scenario(doc);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("load_scenario accepts the smallest valid instance") {
  const Scenario s = load_scenario(kMinimal);
  CHECK(s.vehicle_count() == 1);
  CHECK(s.segment_count() == 1);
  CHECK(s.utility().kind == UtilityKind::Linear);
  CHECK(s.equilibrium_selection() == EquilibriumSelection::Largest);
}

TEST_CASE("load_scenario rejects invariant violations with field and rule") {
  const std::string msg = error_of(with("\"trip_rate\": 1", "\"trip_rate\": 0"));
  CHECK(msg.find("vehicle v1") != std::string::npos);
  CHECK(msg.find("trip_rate must be > 0") != std::string::npos);

  CHECK(error_of(with("\"cost\": 0.5", "\"cost\": -1")).find("cost must be >= 0") !=
        std::string::npos);
  CHECK(error_of(with("\"importance\": 1", "\"importance\": 0")).find("importance") !=
        std::string::npos);
  CHECK(error_of(with("\"aoi_cap\": 10", "\"aoi_cap\": 0")).find("aoi_cap") != std::string::npos);
  CHECK(error_of(with("\"dwell\": 1", "\"dwell\": 0")).find("dwell") != std::string::npos);
  CHECK(error_of(with("\"company_weight\": 1", "\"company_weight\": 1, \"utility\": "
                                               "{\"family\": \"hyperbolic\", \"a0\": 0}"))
            .find("a0") != std::string::npos);
  CHECK(error_of(with("\"cost\": 0.5,", "")).find("missing field 'cost'") != std::string::npos);
}

TEST_CASE("load_scenario names a dangling segment reference") {
  const std::string msg = error_of(with("{\"segment\": \"s1\"", "{\"segment\": \"s99\""));
  CHECK(msg.find("s99") != std::string::npos);
  CHECK(msg.find("vehicle v1") != std::string::npos);
}

TEST_CASE("load_scenario rejects duplicate ids and empty structures") {
  CHECK(error_of(R"({"segments": [], "vehicles": [], "aoi_cap": 1, "company_weight": 1})")
            .find("at least one segment") != std::string::npos);
  CHECK(error_of(with("\"vehicles\": [", "\"vehicles\": [{\"id\": \"v1\", \"cost\": 0, "
                                         "\"value\": 0, \"trip_rate\": 1, \"trajectory\": "
                                         "[{\"segment\": \"s1\", \"dwell\": 1}]},"))
            .find("duplicate vehicle id") != std::string::npos);
  CHECK(error_of(with("\"trajectory\": [{\"segment\": \"s1\", \"dwell\": 1}]",
                      "\"trajectory\": []"))
            .find("trajectory must be non-empty") != std::string::npos);
}

TEST_CASE("malformed JSON reports a byte offset") {
  try {
    load_scenario("{\"segments\": [1, 2,");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.byte_offset() > 0);
    CHECK(std::string(e.what()).find("byte") != std::string::npos);
  }
}

TEST_CASE("save_scenario is canonical and round-trips") {
  const Scenario s = load_scenario(kMinimal);
  const std::string a = save_scenario(s);
  CHECK(a == save_scenario(s));
  CHECK(load_scenario(a) == s);
  CHECK(save_scenario(load_scenario(a)) == a);

  GenConfig cfg;
  cfg.n_vehicles = 20;
  cfg.seed = 11;
  cfg.utility = UtilityFamily::hyperbolic(0.7);
  cfg.equilibrium_selection = EquilibriumSelection::Smallest;
  const Scenario g = generate_scenario(cfg);
  CHECK(load_scenario(save_scenario(g)) == g);
}

TEST_CASE("save/load is the identity on random generated scenarios") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Scenario s = generate_scenario(fixtures::random_config(seed, 15));
    const std::string text = save_scenario(s);
    const Scenario back = load_scenario(text);
    REQUIRE(back == s);
    REQUIRE(save_scenario(back) == text);
  }
}

TEST_CASE("generate_scenario matches the documented stream rule") {
  // Frozen from tests/oracles/gen_oracle.py, an independent implementation.
  GenConfig cfg;
  cfg.seed = 7;
  cfg.n_vehicles = 3;
  cfg.grid_side = 4;
  cfg.walk_length = 6;
  cfg.cost_range = cfg.value_range = cfg.rate_range = {0.5, 1.5};
  const Scenario s = generate_scenario(cfg);
  REQUIRE(s.segment_count() == 16);
  const Vehicle& v1 = s.vehicles()[0];
  CHECK(v1.id == "v1");
  CHECK(v1.cost == 1.2197623824108978);
  CHECK(v1.value == 0.5250459949273921);
  CHECK(v1.trip_rate == 1.3962944573194407);
  CHECK(v1.trajectory ==
        Trajectory{{{"s11", 2.0}, {"s7", 3.0}, {"s3", 1.0}}});
  const Vehicle& v2 = s.vehicles()[1];
  CHECK(v2.cost == 1.2583413754647257);
  CHECK(v2.trajectory.visits.size() == 6);
  const Vehicle& v3 = s.vehicles()[2];
  CHECK(v3.trip_rate == 1.295772168300229);
  CHECK(v3.trajectory ==
        Trajectory{{{"s2", 2.0}, {"s6", 2.0}, {"s5", 1.0}, {"s4", 1.0}}});
}

TEST_CASE("generate_scenario is seeded and honours degenerate settings") {
  GenConfig cfg;
  cfg.n_vehicles = 5;
  cfg.grid_side = 4;
  cfg.walk_length = 6;
  cfg.seed = 7;
  CHECK(generate_scenario(cfg) == generate_scenario(cfg));

  cfg.cost_range = {1.0, 1.0};
  const Scenario flat = generate_scenario(cfg);
  for (const Vehicle& v : flat.vehicles()) CHECK(v.cost == 1.0);

  cfg.grid_side = 1;
  const Scenario one_cell = generate_scenario(cfg);
  for (const Vehicle& v : one_cell.vehicles()) {
    REQUIRE(v.trajectory.visits.size() == 1);
    CHECK(v.trajectory.visits[0].segment == "s0");
    CHECK(v.trajectory.visits[0].dwell == 6.0);
  }
  for (const Segment& seg : one_cell.segments()) CHECK(seg.importance == 1.0);
}

TEST_CASE("smaller populations are prefixes of larger ones") {
  GenConfig cfg;
  cfg.seed = 99;
  cfg.n_vehicles = 10;
  const Scenario big = generate_scenario(cfg);
  cfg.n_vehicles = 5;
  const Scenario small = generate_scenario(cfg);
  for (std::size_t i = 0; i < 5; ++i) CHECK(small.vehicles()[i] == big.vehicles()[i]);
}

TEST_CASE("generated walks move between 4-neighbours") {
  GenConfig cfg;
  cfg.grid_side = 5;
  cfg.walk_length = 30;
  cfg.n_vehicles = 20;
  cfg.seed = 5;
  const Scenario s = generate_scenario(cfg);
  for (const Vehicle& v : s.vehicles()) {
    double dwell = 0.0;
    for (const Visit& visit : v.trajectory.visits) dwell += visit.dwell;
    CHECK(dwell == 30.0);
  }
}

TEST_CASE("invalid generator configs are rejected") {
  GenConfig cfg;
  cfg.rate_range = {0.0, 1.0};
  CHECK_THROWS_AS(generate_scenario(cfg), ValidationError);
  cfg = GenConfig{};
  cfg.cost_range = {2.0, 1.0};
  CHECK_THROWS_AS(generate_scenario(cfg), ValidationError);
  cfg = GenConfig{};
  cfg.grid_side = 0;
  CHECK_THROWS_AS(generate_scenario(cfg), ValidationError);
}

TEST_CASE("id lookups fail with a validation error") {
  const Scenario s = load_scenario(kMinimal);
  CHECK(s.vehicle_index("v1") == 0);
  CHECK_THROWS_AS(s.vehicle_index("nope"), ValidationError);
  CHECK_THROWS_AS(s.segment_index("s2"), ValidationError);
}
