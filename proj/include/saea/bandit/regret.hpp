#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace saea::bandit {

// Ground-truth arm means and realized pull counts, for synthetic validation
// where the expectations are known.
struct RegretLedger {
  std::vector<double> true_means;
  std::vector<std::int64_t> pull_counts;

  double best_mean() const {
    if (true_means.empty()) throw std::invalid_argument("regret ledger has no arms");
    double best = true_means.front();
    for (double m : true_means) best = std::max(best, m);
    return best;
  }
};

// Cumulative (pseudo-)regret R_n = mu* n - sum_j T_j(n) mu_j with the
// realized pull counts plugged in.
inline double cumulative_regret(const RegretLedger& ledger, std::int64_t n) {
  if (ledger.true_means.size() != ledger.pull_counts.size())
    throw std::invalid_argument("regret ledger size mismatch");
  std::int64_t total = 0;
  double exploited = 0.0;
  for (std::size_t j = 0; j < ledger.true_means.size(); ++j) {
    total += ledger.pull_counts[j];
    exploited += static_cast<double>(ledger.pull_counts[j]) * ledger.true_means[j];
  }
  if (total != n) throw std::invalid_argument("pull counts do not sum to n");
  return ledger.best_mean() * static_cast<double>(n) - exploited;
}

}  // namespace saea::bandit
