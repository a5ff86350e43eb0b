#pragma once

#include <vector>

#include "draim/participation.hpp"
#include "draim/payoff.hpp"
#include "draim/scenario.hpp"

namespace draim {

// Stage I: the company picks one uniform reward, anticipating the Stage II
// equilibrium it induces.

struct RewardBounds {
  double lo = 0.0;  // min_i (c_i - v_i): nobody joins below this
  double hi = 0.0;  // max_i c_i: everybody stays at or above this
};

struct Candidate {
  double reward = 0.0;
  ParticipationSet set;
  double payoff = 0.0;
  bool baseline = false;  // the empty-set record
};

enum class SolveMethod { Sweep, Grid };

struct StackelbergSolution {
  Reward r_star;
  ParticipationSet set_star;
  double company_payoff = 0.0;
  std::vector<Candidate> candidates;
  RewardBounds bounds;
  SolveMethod method = SolveMethod::Sweep;
};

// Throws ValidationError for an empty population.
RewardBounds reward_bounds(const Scenario& s);

// Exact optimum over the reward line.
//
// For a fixed induced set the company payoff is strictly decreasing in r, and
// the induced set is a step function of r that changes only where some
// member's marginal cost is hit. So only the left end of each step matters.
//
// Largest selection sweeps downwards: from S = full, record r_S = max m_i(S)
// over members, then drop everyone with m_i(S) >= r_S (the set just below
// r_S) and repeat until S is empty. Smallest selection sweeps upwards: from
// S = empty, record r = min m_j(S) over outsiders and the smallest
// equilibrium there, until S is full. Both append the empty-set baseline
// (r = 0). Ties on payoff go to the smaller reward, then the smaller set,
// then the canonical set order.
StackelbergSolution optimal_reward_sweep(const Scenario& s);

// Oracle: evaluates the configured equilibrium at r_lo + k*step (k >= 0, below
// r_hi) and at r_hi. Candidates record the first grid point of each distinct
// induced set.
StackelbergSolution optimal_reward_grid(const Scenario& s, double step);

const char* to_string(SolveMethod m);

}  // namespace draim
