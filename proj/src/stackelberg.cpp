#include "draim/stackelberg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "draim/equilibrium.hpp"
#include "draim/errors.hpp"

namespace draim {
namespace {

// True when a beats b under the solution ordering.
bool better(const Candidate& a, const Candidate& b) {
  if (a.payoff != b.payoff) return a.payoff > b.payoff;
  if (a.reward != b.reward) return a.reward < b.reward;
  if (a.set.count() != b.set.count()) return a.set.count() < b.set.count();
  return canonical_less(a.set, b.set);
}

Candidate make_candidate(const Scenario& s, ParticipationSet set, double r) {
  Candidate c;
  c.payoff = company_payoff(s, set, Reward(r));
  c.reward = r;
  c.set = std::move(set);
  return c;
}

Candidate baseline(const Scenario& s) {
  Candidate c = make_candidate(s, ParticipationSet::empty(s.vehicle_count()), 0.0);
  c.baseline = true;
  return c;
}

StackelbergSolution finish(const Scenario& s, std::vector<Candidate> candidates,
                           RewardBounds bounds, SolveMethod method) {
  const auto best = std::min_element(candidates.begin(), candidates.end(),
                                     [](const Candidate& a, const Candidate& b) {
                                       return better(a, b);
                                     });
  StackelbergSolution sol;
  sol.r_star = Reward(best->reward);
  sol.set_star = best->set;
  sol.company_payoff = company_payoff(s, sol.set_star, sol.r_star);
  sol.bounds = bounds;
  sol.method = method;
  sol.candidates = std::move(candidates);
  return sol;
}

std::vector<Candidate> descending_sweep(const Scenario& s) {
  std::vector<Candidate> out;
  ParticipationSet set = ParticipationSet::full(s.vehicle_count());
  while (!set.empty()) {
    double r_set = -std::numeric_limits<double>::infinity();
    for (std::size_t i : set.indices()) r_set = std::max(r_set, marginal_cost(s, set, i));
    EquilibriumOutcome at = largest_equilibrium(s, Reward(r_set));
    out.push_back(make_candidate(s, at.set, r_set));
    set = remove_to_fixed_point(s, std::move(at.set), Reward(r_set),
                                RemovalRule::JustBelowReward);
  }
  return out;
}

std::vector<Candidate> ascending_sweep(const Scenario& s) {
  std::vector<Candidate> out;
  ParticipationSet set = ParticipationSet::empty(s.vehicle_count());
  while (set.count() < s.vehicle_count()) {
    double r_next = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < s.vehicle_count(); ++j) {
      if (!set.contains(j)) r_next = std::min(r_next, marginal_cost(s, set, j));
    }
    EquilibriumOutcome at = smallest_equilibrium(s, Reward(r_next));
    set = at.set;
    out.push_back(make_candidate(s, std::move(at.set), r_next));
  }
  return out;
}

}  // namespace

const char* to_string(SolveMethod m) { return m == SolveMethod::Sweep ? "sweep" : "grid"; }

RewardBounds reward_bounds(const Scenario& s) {
  if (s.vehicle_count() == 0) throw ValidationError("reward bounds: scenario has no vehicles");
  RewardBounds b{std::numeric_limits<double>::infinity(),
                 -std::numeric_limits<double>::infinity()};
  for (const Vehicle& v : s.vehicles()) {
    b.lo = std::min(b.lo, v.cost - v.value);
    b.hi = std::max(b.hi, v.cost);
  }
  return b;
}

StackelbergSolution optimal_reward_sweep(const Scenario& s) {
  const RewardBounds bounds = reward_bounds(s);
  std::vector<Candidate> candidates = s.equilibrium_selection() == EquilibriumSelection::Largest
                                          ? descending_sweep(s)
                                          : ascending_sweep(s);
  candidates.push_back(baseline(s));
  return finish(s, std::move(candidates), bounds, SolveMethod::Sweep);
}

StackelbergSolution optimal_reward_grid(const Scenario& s, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw ValidationError("grid step must be > 0");
  const RewardBounds bounds = reward_bounds(s);

  std::vector<Candidate> candidates;
  auto visit = [&](double r) {
    EquilibriumOutcome eq = select_equilibrium(s, Reward(r));
    if (!candidates.empty() && candidates.back().set == eq.set) return;
    candidates.push_back(make_candidate(s, std::move(eq.set), r));
  };
  for (std::size_t k = 0;; ++k) {
    const double r = bounds.lo + static_cast<double>(k) * step;
    if (!(r < bounds.hi)) break;
    visit(r);
  }
  visit(bounds.hi);
  return finish(s, std::move(candidates), bounds, SolveMethod::Grid);
}

}  // namespace draim
