#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "saea/core/rng.hpp"

namespace saea::bandit {

// Per-arm reward bookkeeping. Rewards live in [0,1] by contract.
struct ArmStatistics {
  std::int64_t pull_count = 0;
  double reward_sum = 0.0;
  double reward_sq_sum = 0.0;
  std::vector<double> reward_history;

  double mean() const {
    if (pull_count < 1) throw std::logic_error("mean of an unpulled arm");
    return reward_sum / static_cast<double>(pull_count);
  }
};

struct BanditState {
  std::vector<ArmStatistics> arms;
  std::int64_t total_pulls = 0;

  explicit BanditState(std::size_t num_arms = 0) : arms(num_arms) {}

  bool all_pulled() const {
    for (const auto& a : arms) {
      if (a.pull_count < 1) return false;
    }
    return true;
  }
};

// UCB-Tuned index:
//   score = mean + sqrt((ln n / T) * min(1/4, v(T)))
//   v(s)  = (1/s) sum r^2 - mean^2 + sqrt(2 ln n / s)
// The variance estimate is clamped at zero against floating-point noise;
// mathematically it is non-negative.
inline double ucb_tuned_score(const ArmStatistics& arm, std::int64_t n) {
  if (arm.pull_count < 1) throw std::logic_error("ucb score of an unpulled arm");
  if (n < arm.pull_count || n < 1)
    throw std::invalid_argument("total pulls must be at least the arm's pull count");
  const double t = static_cast<double>(arm.pull_count);
  const double mean = arm.reward_sum / t;
  const double log_n = std::log(static_cast<double>(n));
  const double v = arm.reward_sq_sum / t - mean * mean + std::sqrt(2.0 * log_n / t);
  const double capped = std::min(0.25, std::max(0.0, v));
  return mean + std::sqrt((log_n / t) * capped);
}

namespace detail {

template <typename Score>
std::size_t argmax_with_random_ties(const std::vector<ArmStatistics>& arms, Score&& score,
                                    SeededRng& rng) {
  std::vector<std::size_t> best;
  double best_value = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < arms.size(); ++j) {
    const double s = score(j);
    if (s > best_value) {
      best_value = s;
      best.assign(1, j);
    } else if (s == best_value) {
      best.push_back(j);
    }
  }
  return best.size() == 1 ? best.front() : best[rng.uniform_index(best.size())];
}

}  // namespace detail

// Arm with the maximal UCB-Tuned score; exact ties broken uniformly at
// random. Every arm must have been pulled at least once.
inline std::size_t select_arm_ucb(const BanditState& state, SeededRng& rng) {
  if (state.arms.empty()) throw std::invalid_argument("no arms to select from");
  if (!state.all_pulled()) throw std::logic_error("ucb selection with an unpulled arm present");
  return detail::argmax_with_random_ties(
      state.arms, [&](std::size_t j) { return ucb_tuned_score(state.arms[j], state.total_pulls); },
      rng);
}

// With probability 1-epsilon the arm with the largest cumulative reward sum,
// otherwise a uniformly random arm.
inline std::size_t select_arm_epsilon_greedy(const BanditState& state, double epsilon,
                                             SeededRng& rng) {
  if (state.arms.empty()) throw std::invalid_argument("no arms to select from");
  if (!(epsilon >= 0.0 && epsilon <= 1.0))
    throw std::invalid_argument("epsilon must lie in [0,1]");
  if (!state.all_pulled())
    throw std::logic_error("epsilon-greedy selection with an unpulled arm present");
  if (rng.uniform01() < 1.0 - epsilon) {
    return detail::argmax_with_random_ties(
        state.arms, [&](std::size_t j) { return state.arms[j].reward_sum; }, rng);
  }
  return rng.uniform_index(state.arms.size());
}

inline std::size_t select_arm_random(std::size_t num_arms, SeededRng& rng) {
  if (num_arms < 1) throw std::invalid_argument("need at least one arm");
  return rng.uniform_index(num_arms);
}

inline void record_pull(BanditState& state, std::size_t arm, double reward) {
  if (arm >= state.arms.size()) throw std::out_of_range("arm index out of range");
  if (!(reward >= 0.0 && reward <= 1.0)) throw std::out_of_range("reward must lie in [0,1]");
  ArmStatistics& a = state.arms[arm];
  a.pull_count += 1;
  a.reward_sum += reward;
  a.reward_sq_sum += reward * reward;
  a.reward_history.push_back(reward);
  state.total_pulls += 1;
}

}  // namespace saea::bandit
