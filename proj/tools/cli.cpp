#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "draim/aoi.hpp"
#include "draim/equilibrium.hpp"
#include "draim/errors.hpp"
#include "draim/experiments.hpp"
#include "draim/report_json.hpp"
#include "draim/scenario.hpp"
#include "draim/stackelberg.hpp"

namespace draim::cli {
namespace {

using nlohmann::ordered_json;

// Raised for problems with files named on the command line.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot read scenario file '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file), {});
}

Scenario read_scenario(const std::string& path, std::istream& in) {
  const std::string text = read_input(path, in);
  try {
    return load_scenario(text);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.byte_offset());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    out.flush();
    return;
  }
  std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw OutputError("cannot write '" + out_path + "'");
  file << text;
  if (!file) throw OutputError("failed writing '" + out_path + "'");
}

std::vector<std::string> split_ids(const std::string& list) {
  std::vector<std::string> ids;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) ids.push_back(item);
  }
  return ids;
}

struct GenOptions {
  GenConfig cfg;
  std::string utility = "linear";
  double a0 = 1.0;
  std::string selection = "largest";
  std::string out;
};

struct SolveOptions {
  std::string scenario;
  double grid_step = 0.0;
  std::string out;
};

struct EquilibriumOptions {
  std::string scenario;
  double reward = 0.0;
  bool enumerate = false;
  std::string out;
};

struct SimulateOptions {
  std::string scenario;
  std::optional<double> reward_set;
  std::string set;
  double horizon = 0.0;
  std::uint64_t seed = 0;
  double warmup = 0.1;
  std::string out;
};

struct SweepOptions {
  std::string family;
  std::vector<std::uint64_t> seeds = default_seeds();
  std::vector<int> sizes = kDefaultSizes;
  bool csv = false;
  double tolerance = 1e-9;
  std::string out;
};

int do_gen(const GenOptions& o, std::ostream& out) {
  GenConfig cfg = o.cfg;
  if (o.utility == "hyperbolic") {
    cfg.utility = UtilityFamily::hyperbolic(o.a0);
  } else {
    cfg.utility = UtilityFamily::linear();
  }
  cfg.equilibrium_selection =
      o.selection == "smallest" ? EquilibriumSelection::Smallest : EquilibriumSelection::Largest;
  emit(save_scenario(generate_scenario(cfg)), o.out, out);
  return kSuccess;
}

int do_solve(const SolveOptions& o, std::istream& in, std::ostream& out) {
  const Scenario s = read_scenario(o.scenario, in);
  const StackelbergSolution sol =
      o.grid_step > 0.0 ? optimal_reward_grid(s, o.grid_step) : optimal_reward_sweep(s);
  emit(render(to_json(s, sol)), o.out, out);
  return kSuccess;
}

int do_equilibrium(const EquilibriumOptions& o, std::istream& in, std::ostream& out) {
  const Scenario s = read_scenario(o.scenario, in);
  const Reward r(o.reward);
  ordered_json doc = to_json(s, select_equilibrium(s, r));
  doc["selection"] = to_string(s.equilibrium_selection());
  if (o.enumerate) {
    ordered_json all = ordered_json::array();
    for (const ParticipationSet& set : enumerate_equilibria(s, r)) {
      ordered_json ids = ordered_json::array();
      for (const std::string& id : set.ids(s)) ids.push_back(id);
      all.push_back(std::move(ids));
    }
    doc["all_equilibria"] = std::move(all);
  }
  emit(render(doc), o.out, out);
  return kSuccess;
}

int do_simulate(const SimulateOptions& o, std::istream& in, std::ostream& out) {
  const Scenario s = read_scenario(o.scenario, in);
  ParticipationSet set(s.vehicle_count());
  if (o.reward_set) {
    set = select_equilibrium(s, Reward(*o.reward_set)).set;
  } else {
    const auto ids = split_ids(o.set);
    set = ParticipationSet::from_ids(s, ids);
  }
  const SimResult sim = simulate_aoi(s, set, o.horizon, o.warmup, o.seed);
  const AoiReport closed = aoi_report(s, set);

  ordered_json table = ordered_json::array();
  for (std::size_t k = 0; k < s.segment_count(); ++k) {
    const double expected = closed.per_segment[k];
    const double empirical = sim.per_segment_empirical_age[k];
    table.push_back({{"segment", s.segments()[k].id},
                     {"rate", segment_update_rate(s, set, k)},
                     {"closed_form", expected},
                     {"empirical", empirical},
                     {"relative_error", std::abs(empirical - expected) / expected}});
  }
  ordered_json doc;
  ordered_json ids = ordered_json::array();
  for (const std::string& id : set.ids(s)) ids.push_back(id);
  doc["set"] = std::move(ids);
  doc["simulation"] = to_json(s, sim);
  doc["closed_form"] = to_json(s, closed);
  doc["comparison"] = std::move(table);
  emit(render(doc), o.out, out);
  return kSuccess;
}

int do_sweep(const SweepOptions& o, std::ostream& out) {
  const auto label = parse_family(o.family);
  if (!label) throw ValidationError("unknown family '" + o.family + "'");
  FamilyConfig f = default_family(*label);
  f.seeds = o.seeds;
  f.sizes = o.sizes;
  const ObservationReport report = observation_report(f, o.tolerance);
  emit(o.csv ? sweep_csv(*label, report.records) : render(to_json(report)), o.out, out);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Reward design for dual-role HD-map crowdsourcing: scenario generation, "
               "Stackelberg solving, AoI simulation and population sweeps.",
               "draim"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded grid scenario as JSON");
  gen_cmd->add_option("--seed", gen.cfg.seed, "PRNG seed")->capture_default_str();
  gen_cmd->add_option("--vehicles", gen.cfg.n_vehicles, "Number of vehicles")
      ->capture_default_str();
  gen_cmd->add_option("--grid", gen.cfg.grid_side, "Grid side g (g*g segments)")
      ->capture_default_str();
  gen_cmd->add_option("--walk", gen.cfg.walk_length, "Cells visited per trajectory")
      ->capture_default_str();
  gen_cmd->add_option("--cost-min", gen.cfg.cost_range.lo)->capture_default_str();
  gen_cmd->add_option("--cost-max", gen.cfg.cost_range.hi)->capture_default_str();
  gen_cmd->add_option("--value-min", gen.cfg.value_range.lo)->capture_default_str();
  gen_cmd->add_option("--value-max", gen.cfg.value_range.hi)->capture_default_str();
  gen_cmd->add_option("--rate-min", gen.cfg.rate_range.lo)->capture_default_str();
  gen_cmd->add_option("--rate-max", gen.cfg.rate_range.hi)->capture_default_str();
  gen_cmd->add_option("--aoi-cap", gen.cfg.aoi_cap, "AoI of a never-refreshed segment")
      ->capture_default_str();
  gen_cmd->add_option("--company-weight", gen.cfg.company_weight,
                      "Company cost per unit of map AoI")
      ->capture_default_str();
  gen_cmd->add_option("--utility", gen.utility, "Usage utility family")
      ->check(CLI::IsMember({"linear", "hyperbolic"}))
      ->capture_default_str();
  gen_cmd->add_option("--a0", gen.a0, "Scale of the hyperbolic family")->capture_default_str();
  gen_cmd->add_option("--selection", gen.selection, "Stage II equilibrium selection")
      ->check(CLI::IsMember({"largest", "smallest"}))
      ->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Write to file instead of stdout");

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Optimal uniform reward for a scenario");
  solve_cmd->add_option("scenario", solve.scenario, "Scenario JSON path ('-' for stdin)")
      ->required();
  solve_cmd->add_option("--grid-step", solve.grid_step,
                        "Use the grid search with this step instead of the exact sweep");
  solve_cmd->add_option("--out", solve.out, "Write to file instead of stdout");

  EquilibriumOptions eq;
  auto* eq_cmd = app.add_subcommand("equilibrium", "Stage II participation at a given reward");
  eq_cmd->add_option("scenario", eq.scenario, "Scenario JSON path ('-' for stdin)")->required();
  eq_cmd->add_option("--reward", eq.reward, "Uniform reward (negative = charge)")->required();
  eq_cmd->add_flag("--enumerate", eq.enumerate,
                   "Also list every equilibrium by exhaustive scan (<= 20 vehicles)");
  eq_cmd->add_option("--out", eq.out, "Write to file instead of stdout");

  SimulateOptions sim;
  auto* sim_cmd = app.add_subcommand(
      "simulate", "Monte Carlo segment ages compared against the closed form");
  sim_cmd->add_option("scenario", sim.scenario, "Scenario JSON path ('-' for stdin)")
      ->required();
  auto* reward_set_opt = sim_cmd->add_option(
      "--reward-set", sim.reward_set,
      "Simulate the participation set induced by this reward");
  auto* set_opt =
      sim_cmd->add_option("--set", sim.set, "Comma-separated vehicle ids to simulate");
  reward_set_opt->excludes(set_opt);
  sim_cmd->add_option("--horizon", sim.horizon, "Simulated time")->required();
  sim_cmd->add_option("--seed", sim.seed, "PRNG seed")->capture_default_str();
  sim_cmd->add_option("--warmup", sim.warmup, "Discarded fraction of the horizon")
      ->capture_default_str();
  sim_cmd->add_option("--out", sim.out, "Write to file instead of stdout");

  SweepOptions sweep;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "Population sweep and observation report for a family");
  sweep_cmd
      ->add_option("--family", sweep.family,
                   "NarrowCostCovered | WideCost | CostExceedsValue")
      ->required();
  sweep_cmd->add_option("--seeds", sweep.seeds, "Replication seeds")
      ->delimiter(',')
      ->capture_default_str();
  sweep_cmd->add_option("--sizes", sweep.sizes, "Population sizes")
      ->delimiter(',')
      ->capture_default_str();
  sweep_cmd->add_flag("--csv", sweep.csv, "Emit the record table as CSV instead of JSON");
  sweep_cmd->add_option("--tolerance", sweep.tolerance, "Monotonicity tolerance")
      ->capture_default_str();
  sweep_cmd->add_option("--out", sweep.out, "Write to file instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  if (sim_cmd->parsed() && !sim.reward_set && set_opt->count() == 0) {
    err << "error: simulate needs --reward-set or --set\n";
    return kUsage;
  }

  try {
    if (gen_cmd->parsed()) return do_gen(gen, out);
    if (solve_cmd->parsed()) return do_solve(solve, in, out);
    if (eq_cmd->parsed()) return do_equilibrium(eq, in, out);
    if (sim_cmd->parsed()) return do_simulate(sim, in, out);
    if (sweep_cmd->parsed()) return do_sweep(sweep, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace draim::cli
