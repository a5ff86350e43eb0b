#include "draim/scenario.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "draim/errors.hpp"
#include "draim/rng.hpp"
#include "json.hpp"

namespace draim {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& msg) { throw ValidationError(msg); }

void require(bool ok, const std::string& where, const char* rule) {
  if (!ok) fail(where + ": " + rule);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where + ": missing field '" + key + "'");
  return *it;
}

double number(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_number()) fail(where + ": " + key + " must be a number");
  return v.get<double>();
}

std::string text(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) fail(where + ": " + key + " must be a string");
  return v.get<std::string>();
}

const json& array(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_array()) fail(where + ": " + key + " must be an array");
  return v;
}

}  // namespace

Scenario::Scenario(ScenarioData data) : data_(std::move(data)) {
  const auto& segs = data_.road_map.segments;
  require(!segs.empty(), "road map", "must contain at least one segment");
  for (std::size_t k = 0; k < segs.size(); ++k) {
    const std::string where = "segment " + segs[k].id;
    require(!segs[k].id.empty(), "segment #" + std::to_string(k), "id must be non-empty");
    require(std::isfinite(segs[k].importance) && segs[k].importance > 0, where,
            "importance must be > 0");
    if (!segment_lookup_.emplace(segs[k].id, k).second) fail(where + ": duplicate segment id");
  }

  require(std::isfinite(data_.aoi_cap) && data_.aoi_cap > 0, "scenario", "aoi_cap must be > 0");
  require(std::isfinite(data_.company_weight) && data_.company_weight >= 0, "scenario",
          "company_weight must be >= 0");
  if (data_.utility.kind == UtilityKind::Hyperbolic) {
    require(std::isfinite(data_.utility.a0) && data_.utility.a0 > 0, "utility",
            "a0 must be > 0 for the hyperbolic family");
  }

  visitors_.assign(segs.size(), {});
  footprints_.reserve(data_.vehicles.size());
  for (std::size_t i = 0; i < data_.vehicles.size(); ++i) {
    const Vehicle& v = data_.vehicles[i];
    const std::string where = "vehicle " + v.id;
    require(!v.id.empty(), "vehicle #" + std::to_string(i), "id must be non-empty");
    if (!vehicle_lookup_.emplace(v.id, i).second) fail(where + ": duplicate vehicle id");
    require(std::isfinite(v.cost) && v.cost >= 0, where, "cost must be >= 0");
    require(std::isfinite(v.value) && v.value >= 0, where, "value must be >= 0");
    require(std::isfinite(v.trip_rate) && v.trip_rate > 0, where, "trip_rate must be > 0");
    require(!v.trajectory.visits.empty(), where, "trajectory must be non-empty");

    Footprint fp;
    std::unordered_map<std::size_t, std::size_t> slot;
    for (const Visit& visit : v.trajectory.visits) {
      auto it = segment_lookup_.find(visit.segment);
      if (it == segment_lookup_.end()) {
        fail(where + ": trajectory references unknown segment " + visit.segment);
      }
      require(std::isfinite(visit.dwell) && visit.dwell > 0, where,
              "dwell weight must be > 0");
      auto [pos, fresh] = slot.emplace(it->second, fp.segments.size());
      if (fresh) {
        fp.segments.push_back(it->second);
        fp.dwell.push_back(visit.dwell);
      } else {
        fp.dwell[pos->second] += visit.dwell;
      }
    }
    for (std::size_t k = 0; k < fp.segments.size(); ++k) {
      fp.total_dwell += fp.dwell[k];
      visitors_[fp.segments[k]].push_back(i);
    }
    footprints_.push_back(std::move(fp));
  }
}

std::size_t Scenario::segment_index(std::string_view id) const {
  auto it = segment_lookup_.find(std::string(id));
  if (it == segment_lookup_.end()) fail("unknown segment " + std::string(id));
  return it->second;
}

std::size_t Scenario::vehicle_index(std::string_view id) const {
  auto it = vehicle_lookup_.find(std::string(id));
  if (it == vehicle_lookup_.end()) fail("unknown vehicle " + std::string(id));
  return it->second;
}

void Scenario::check_vehicle(std::size_t vehicle) const {
  if (vehicle >= vehicle_count()) fail("unknown vehicle index " + std::to_string(vehicle));
}

void Scenario::check_segment(std::size_t segment) const {
  if (segment >= segment_count()) fail("unknown segment index " + std::to_string(segment));
}

const char* to_string(EquilibriumSelection sel) {
  return sel == EquilibriumSelection::Largest ? "largest" : "smallest";
}

const char* to_string(UtilityKind kind) {
  return kind == UtilityKind::Linear ? "linear" : "hyperbolic";
}

void validate(const GenConfig& cfg) {
  require(cfg.grid_side > 0, "gen config", "grid_side must be > 0");
  require(cfg.n_vehicles > 0, "gen config", "n_vehicles must be > 0");
  require(cfg.walk_length > 0, "gen config", "walk_length must be > 0");
  auto check_range = [](const Interval& r, const char* name) {
    require(std::isfinite(r.lo) && std::isfinite(r.hi) && r.lo <= r.hi, "gen config",
            (std::string(name) + " lower bound must be <= upper bound").c_str());
  };
  check_range(cfg.cost_range, "cost_range");
  check_range(cfg.value_range, "value_range");
  check_range(cfg.rate_range, "rate_range");
  require(cfg.cost_range.lo >= 0, "gen config", "cost_range must be non-negative");
  require(cfg.value_range.lo >= 0, "gen config", "value_range must be non-negative");
  require(cfg.rate_range.lo > 0, "gen config", "rate_range lower bound must be > 0");
}

Scenario generate_scenario(const GenConfig& cfg) {
  validate(cfg);
  const int g = cfg.grid_side;
  const std::uint64_t cells = static_cast<std::uint64_t>(g) * static_cast<std::uint64_t>(g);

  ScenarioData data;
  data.aoi_cap = cfg.aoi_cap;
  data.company_weight = cfg.company_weight;
  data.utility = cfg.utility;
  data.equilibrium_selection = cfg.equilibrium_selection;
  data.road_map.segments.reserve(cells);
  for (std::uint64_t c = 0; c < cells; ++c) {
    data.road_map.segments.push_back({"s" + std::to_string(c), 1.0});
  }

  data.vehicles.reserve(static_cast<std::size_t>(cfg.n_vehicles));
  for (int k = 0; k < cfg.n_vehicles; ++k) {
    SplitMix64 rng(derive_stream_seed(cfg.seed, static_cast<std::uint64_t>(k)));
    Vehicle v;
    v.id = "v" + std::to_string(k + 1);
    v.cost = rng.uniform(cfg.cost_range.lo, cfg.cost_range.hi);
    v.value = rng.uniform(cfg.value_range.lo, cfg.value_range.hi);
    v.trip_rate = rng.uniform(cfg.rate_range.lo, cfg.rate_range.hi);

    std::uint64_t cell = rng.below(cells);
    std::vector<std::uint64_t> order;
    std::vector<double> dwell;
    auto step_on = [&](std::uint64_t c) {
      for (std::size_t j = 0; j < order.size(); ++j) {
        if (order[j] == c) {
          dwell[j] += 1.0;
          return;
        }
      }
      order.push_back(c);
      dwell.push_back(1.0);
    };
    step_on(cell);
    for (int step = 1; step < cfg.walk_length; ++step) {
      const long row = static_cast<long>(cell) / g;
      const long col = static_cast<long>(cell) % g;
      std::uint64_t options[4];
      std::uint64_t m = 0;
      if (row > 0) options[m++] = cell - g;
      if (row < g - 1) options[m++] = cell + g;
      if (col > 0) options[m++] = cell - 1;
      if (col < g - 1) options[m++] = cell + 1;
      if (m > 0) cell = options[rng.below(m)];
      step_on(cell);
    }
    for (std::size_t j = 0; j < order.size(); ++j) {
      v.trajectory.visits.push_back({"s" + std::to_string(order[j]), dwell[j]});
    }
    data.vehicles.push_back(std::move(v));
  }
  return Scenario(std::move(data));
}

Scenario load_scenario(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON at byte ") + std::to_string(e.byte) + ": " +
                         e.what(),
                     e.byte);
  }
  if (!doc.is_object()) fail("scenario: top-level value must be an object");

  ScenarioData data;
  for (const json& s : array(doc, "segments", "scenario")) {
    data.road_map.segments.push_back(
        {text(s, "id", "segment"), number(s, "importance", "segment")});
  }
  for (const json& v : array(doc, "vehicles", "scenario")) {
    Vehicle veh;
    veh.id = text(v, "id", "vehicle");
    const std::string where = "vehicle " + veh.id;
    veh.cost = number(v, "cost", where);
    veh.value = number(v, "value", where);
    veh.trip_rate = number(v, "trip_rate", where);
    for (const json& visit : array(v, "trajectory", where)) {
      veh.trajectory.visits.push_back({text(visit, "segment", where), number(visit, "dwell", where)});
    }
    data.vehicles.push_back(std::move(veh));
  }
  data.aoi_cap = number(doc, "aoi_cap", "scenario");
  data.company_weight = number(doc, "company_weight", "scenario");

  if (doc.contains("utility")) {
    const json& u = doc["utility"];
    const std::string family = text(u, "family", "utility");
    if (family == "linear") {
      data.utility = UtilityFamily::linear();
    } else if (family == "hyperbolic") {
      data.utility = UtilityFamily::hyperbolic(number(u, "a0", "utility"));
    } else {
      fail("utility: family must be \"linear\" or \"hyperbolic\"");
    }
  }
  if (doc.contains("equilibrium_selection")) {
    const std::string sel = text(doc, "equilibrium_selection", "scenario");
    if (sel == "largest") {
      data.equilibrium_selection = EquilibriumSelection::Largest;
    } else if (sel == "smallest") {
      data.equilibrium_selection = EquilibriumSelection::Smallest;
    } else {
      fail("scenario: equilibrium_selection must be \"largest\" or \"smallest\"");
    }
  }
  return Scenario(std::move(data));
}

std::string save_scenario(const Scenario& s) {
  ordered_json doc;
  doc["segments"] = ordered_json::array();
  for (const Segment& seg : s.segments()) {
    doc["segments"].push_back({{"id", seg.id}, {"importance", seg.importance}});
  }
  doc["vehicles"] = ordered_json::array();
  for (const Vehicle& v : s.vehicles()) {
    ordered_json traj = ordered_json::array();
    for (const Visit& visit : v.trajectory.visits) {
      traj.push_back({{"segment", visit.segment}, {"dwell", visit.dwell}});
    }
    doc["vehicles"].push_back({{"id", v.id},
                               {"cost", v.cost},
                               {"value", v.value},
                               {"trip_rate", v.trip_rate},
                               {"trajectory", std::move(traj)}});
  }
  doc["aoi_cap"] = s.aoi_cap();
  doc["company_weight"] = s.company_weight();
  ordered_json utility;
  utility["family"] = to_string(s.utility().kind);
  if (s.utility().kind == UtilityKind::Hyperbolic) utility["a0"] = s.utility().a0;
  doc["utility"] = std::move(utility);
  doc["equilibrium_selection"] = to_string(s.equilibrium_selection());
  return doc.dump(2) + "\n";
}

}  // namespace draim
