#pragma once

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "saea/bandit/regret.hpp"
#include "saea/bandit/ucb.hpp"
#include "saea/core/rng.hpp"

namespace saea::bandit {

// Selection policy of the synthetic simulator: "ucb-t", "eg:<epsilon>" or
// "rs".
struct SimPolicy {
  enum class Kind { UcbTuned, EpsilonGreedy, Random };
  Kind kind = Kind::UcbTuned;
  double epsilon = 0.5;

  static SimPolicy parse(std::string_view text) {
    SimPolicy p;
    if (text == "ucb-t") {
      p.kind = Kind::UcbTuned;
    } else if (text == "rs") {
      p.kind = Kind::Random;
    } else if (text.rfind("eg:", 0) == 0) {
      p.kind = Kind::EpsilonGreedy;
      const std::string_view eps = text.substr(3);
      const auto res = std::from_chars(eps.data(), eps.data() + eps.size(), p.epsilon);
      if (res.ec != std::errc{} || res.ptr != eps.data() + eps.size() ||
          !(p.epsilon >= 0.0 && p.epsilon <= 1.0))
        throw std::invalid_argument("bad epsilon in policy: " + std::string(text));
    } else {
      throw std::invalid_argument("unknown bandit policy: " + std::string(text) +
                                  " (expected ucb-t, eg:<eps> or rs)");
    }
    return p;
  }
};

struct BanditStep {
  std::int64_t step;   // 1-based
  std::size_t arm;
  double reward;
  double cumulative_regret;
};

// Stationary Bernoulli bandit run for one seed. Index policies bootstrap by
// pulling each arm once in round-robin order; the random policy needs no
// bootstrap.
inline std::vector<BanditStep> simulate_bandit(const std::vector<double>& means,
                                               std::int64_t horizon, const SimPolicy& policy,
                                               std::uint64_t seed) {
  if (means.empty()) throw std::invalid_argument("bandit simulation needs at least one arm");
  for (double m : means) {
    if (!(m >= 0.0 && m <= 1.0)) throw std::invalid_argument("bernoulli means must lie in [0,1]");
  }
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");

  SeededRng root(seed);
  SeededRng reward_rng = root.derive("rewards");
  SeededRng policy_rng = root.derive("policy");

  BanditState state(means.size());
  RegretLedger ledger{means, std::vector<std::int64_t>(means.size(), 0)};
  std::vector<BanditStep> rows;
  rows.reserve(static_cast<std::size_t>(horizon));

  for (std::int64_t step = 1; step <= horizon; ++step) {
    std::size_t arm = 0;
    switch (policy.kind) {
      case SimPolicy::Kind::Random:
        arm = select_arm_random(means.size(), policy_rng);
        break;
      case SimPolicy::Kind::UcbTuned:
        if (!state.all_pulled()) {
          arm = static_cast<std::size_t>(state.total_pulls) % means.size();
        } else {
          arm = select_arm_ucb(state, policy_rng);
        }
        break;
      case SimPolicy::Kind::EpsilonGreedy:
        if (!state.all_pulled()) {
          arm = static_cast<std::size_t>(state.total_pulls) % means.size();
        } else {
          arm = select_arm_epsilon_greedy(state, policy.epsilon, policy_rng);
        }
        break;
    }
    const double reward = reward_rng.uniform01() < means[arm] ? 1.0 : 0.0;
    record_pull(state, arm, reward);
    ledger.pull_counts[arm] += 1;
    rows.push_back({step, arm, reward, cumulative_regret(ledger, step)});
  }
  return rows;
}

}  // namespace saea::bandit
