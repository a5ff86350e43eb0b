#pragma once

#include <string>

#include "draim/aoi.hpp"
#include "draim/equilibrium.hpp"
#include "draim/experiments.hpp"
#include "draim/payoff.hpp"
#include "draim/stackelberg.hpp"
#include "json.hpp"

namespace draim {

// Result documents. Same conventions as save_scenario: fixed key order,
// shortest round-trip numbers, members listed as sorted vehicle ids.

// Shortest decimal that parses back to x, as printed in JSON documents.
std::string format_number(double x);

nlohmann::ordered_json to_json(const PayoffBreakdown& p);
nlohmann::ordered_json to_json(const Scenario& s, const AoiReport& r);
nlohmann::ordered_json to_json(const Scenario& s, const SimResult& r);
nlohmann::ordered_json to_json(const Scenario& s, const EquilibriumOutcome& o);
nlohmann::ordered_json to_json(const Scenario& s, const StackelbergSolution& sol);
nlohmann::ordered_json to_json(const SweepRecord& r);
nlohmann::ordered_json to_json(const ObservationReport& r);

// dump(2) plus trailing newline.
std::string render(const nlohmann::ordered_json& doc);

}  // namespace draim
