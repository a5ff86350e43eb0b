#include "draim/report_json.hpp"

namespace draim {

using nlohmann::ordered_json;

namespace {

ordered_json id_list(const Scenario& s, const ParticipationSet& set) {
  ordered_json out = ordered_json::array();
  for (const std::string& id : set.ids(s)) out.push_back(id);
  return out;
}

ordered_json to_json(const MonotoneVerdict& v) {
  ordered_json out;
  out["ok"] = v.ok;
  if (!v.ok) {
    out["first_violation"] = v.first_violation;
    out["magnitude"] = v.magnitude;
  }
  return out;
}

}  // namespace

std::string format_number(double x) { return ordered_json(x).dump(); }

std::string render(const ordered_json& doc) { return doc.dump(2) + "\n"; }

ordered_json to_json(const PayoffBreakdown& p) {
  return {{"usage_utility", p.usage_utility},
          {"cost", p.cost},
          {"reward", p.reward},
          {"total", p.total}};
}

ordered_json to_json(const Scenario& s, const AoiReport& r) {
  ordered_json seg = ordered_json::object();
  for (std::size_t k = 0; k < r.per_segment.size(); ++k) {
    seg[s.segments()[k].id] = r.per_segment[k];
  }
  ordered_json veh = ordered_json::object();
  for (std::size_t i = 0; i < r.per_vehicle_trajectory_aoi.size(); ++i) {
    veh[s.vehicles()[i].id] = r.per_vehicle_trajectory_aoi[i];
  }
  ordered_json out;
  out["per_segment"] = std::move(seg);
  out["map_aoi"] = r.map_aoi;
  out["per_vehicle_trajectory_aoi"] = std::move(veh);
  return out;
}

ordered_json to_json(const Scenario& s, const SimResult& r) {
  ordered_json seg = ordered_json::object();
  for (std::size_t k = 0; k < r.per_segment_empirical_age.size(); ++k) {
    seg[s.segments()[k].id] = r.per_segment_empirical_age[k];
  }
  ordered_json out;
  out["per_segment_empirical_age"] = std::move(seg);
  out["horizon"] = r.horizon;
  out["warmup"] = r.warmup;
  out["seed"] = r.seed;
  return out;
}

ordered_json to_json(const Scenario& s, const EquilibriumOutcome& o) {
  ordered_json per = ordered_json::object();
  for (std::size_t i = 0; i < o.per_vehicle.size(); ++i) {
    per[s.vehicles()[i].id] = to_json(o.per_vehicle[i]);
  }
  ordered_json out;
  out["reward"] = o.reward.value;
  out["set"] = id_list(s, o.set);
  out["per_vehicle"] = std::move(per);
  out["certified"] = o.certified;
  out["rounds"] = o.rounds;
  return out;
}

ordered_json to_json(const Scenario& s, const StackelbergSolution& sol) {
  ordered_json cands = ordered_json::array();
  for (const Candidate& c : sol.candidates) {
    cands.push_back({{"r", c.reward},
                     {"set", id_list(s, c.set)},
                     {"payoff", c.payoff},
                     {"baseline", c.baseline}});
  }
  ordered_json out;
  out["method"] = to_string(sol.method);
  out["r_star"] = sol.r_star.value;
  out["set_star"] = id_list(s, sol.set_star);
  out["company_payoff"] = sol.company_payoff;
  out["bounds"] = {{"r_lo", sol.bounds.lo}, {"r_hi", sol.bounds.hi}};
  out["candidates"] = std::move(cands);
  return out;
}

ordered_json to_json(const SweepRecord& r) {
  return {{"seed", r.seed},
          {"n_vehicles", r.n_vehicles},
          {"r_star", r.r_star},
          {"set_size", r.set_size},
          {"participation_fraction", r.participation_fraction},
          {"company_payoff", r.company_payoff},
          {"map_aoi_at_optimum", r.map_aoi_at_optimum}};
}

ordered_json to_json(const ObservationReport& r) {
  ordered_json seeds = ordered_json::array();
  for (const SeedVerdict& v : r.per_seed) {
    ordered_json item;
    item["seed"] = v.seed;
    item["r_star"] = v.r_star;
    item["participation_fraction"] = v.fraction;
    item["company_payoff"] = v.payoff;
    item["full_participation_covers_costs"] = v.full_participation_covers_costs;
    item["reward_monotone"] = to_json(v.reward_monotone);
    item["participation_declines"] = v.participation_declines;
    item["decline_start_n"] = r.sizes.at(v.decline_start);
    item["reward_over_decline"] = to_json(v.reward_over_decline);
    item["all_rewards_positive"] = v.all_rewards_positive;
    item["payoff_declines"] = v.payoff_declines;
    item["obs1"] = v.obs1;
    item["obs2"] = v.obs2;
    item["obs3"] = v.obs3;
    seeds.push_back(std::move(item));
  }
  ordered_json records = ordered_json::array();
  for (const SweepRecord& rec : r.records) records.push_back(to_json(rec));

  ordered_json out;
  out["family"] = to_string(r.family);
  out["sizes"] = r.sizes;
  out["tolerance"] = r.tolerance;
  out["summary"] = {{"seeds", r.per_seed.size()},
                    {"precondition_pass", r.precondition_pass},
                    {"obs1_pass", r.obs1_pass},
                    {"obs2_pass", r.obs2_pass},
                    {"obs3_pass", r.obs3_pass}};
  out["per_seed"] = std::move(seeds);
  out["records"] = std::move(records);
  return out;
}

}  // namespace draim
