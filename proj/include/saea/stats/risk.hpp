#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "saea/stats/ranksum.hpp"

namespace saea::stats {

// Final-fitness trials indexed by (algorithm, problem). Labels keep
// insertion order for stable reporting.
class ResultMatrix {
 public:
  void add_trial(const std::string& algorithm, const std::string& problem, double value) {
    if (!std::isfinite(value)) throw std::invalid_argument("result matrix rejects non-finite values");
    register_label(algorithms_, algorithm);
    register_label(problems_, problem);
    cells_[{algorithm, problem}].push_back(value);
  }

  const std::vector<std::string>& algorithms() const { return algorithms_; }
  const std::vector<std::string>& problems() const { return problems_; }

  bool has(const std::string& algorithm, const std::string& problem) const {
    return cells_.count({algorithm, problem}) > 0;
  }

  const std::vector<double>& trials(const std::string& algorithm, const std::string& problem) const {
    const auto it = cells_.find({algorithm, problem});
    if (it == cells_.end())
      throw std::invalid_argument("no trials for (" + algorithm + ", " + problem + ")");
    return it->second;
  }

  // Every algorithm must have trials on every problem.
  void require_complete() const {
    std::vector<std::string> missing;
    for (const auto& a : algorithms_) {
      for (const auto& p : problems_) {
        if (!has(a, p)) missing.push_back("(" + a + ", " + p + ")");
      }
    }
    if (!missing.empty()) {
      std::string msg = "result matrix is missing cells:";
      for (const auto& m : missing) msg += " " + m;
      throw std::invalid_argument(msg);
    }
  }

 private:
  static void register_label(std::vector<std::string>& labels, const std::string& label) {
    for (const auto& l : labels) {
      if (l == label) return;
    }
    labels.push_back(label);
  }

  std::vector<std::string> algorithms_;
  std::vector<std::string> problems_;
  std::map<std::pair<std::string, std::string>, std::vector<double>> cells_;
};

// Empirical probability that a trial of algorithm i beats (is strictly
// smaller than) a trial of algorithm j on the same problem:
//   sum_s sum_t I(y_i_s < y_j_t) / (s_i * s_j).
// Ties count for neither direction.
inline double pairwise_outperform(const std::vector<double>& yi, const std::vector<double>& yj) {
  if (yi.empty() || yj.empty()) throw std::invalid_argument("pairwise_outperform needs trials");
  std::size_t wins = 0;
  for (double a : yi) {
    for (double b : yj) {
      if (a < b) ++wins;
    }
  }
  return static_cast<double>(wins) / (static_cast<double>(yi.size()) * static_cast<double>(yj.size()));
}

// Risk comparison P(A_i beats A_j): the mean of pairwise_outperform across
// the shared problem set.
inline double risk(const ResultMatrix& results, const std::string& algorithm_i,
                   const std::string& algorithm_j) {
  double sum = 0.0;
  std::size_t count = 0;
  for (const auto& problem : results.problems()) {
    if (!results.has(algorithm_i, problem) || !results.has(algorithm_j, problem))
      throw std::invalid_argument("risk: algorithms do not share problem " + problem);
    sum += pairwise_outperform(results.trials(algorithm_i, problem),
                               results.trials(algorithm_j, problem));
    ++count;
  }
  if (count == 0) throw std::invalid_argument("risk: empty problem set");
  return sum / static_cast<double>(count);
}

// All-pairs risk matrix; entry [i][j] is P(algorithm i beats algorithm j).
inline std::vector<std::vector<double>> risk_table(const ResultMatrix& results) {
  results.require_complete();
  const auto& algs = results.algorithms();
  std::vector<std::vector<double>> table(algs.size(), std::vector<double>(algs.size(), 0.0));
  for (std::size_t i = 0; i < algs.size(); ++i) {
    for (std::size_t j = 0; j < algs.size(); ++j) {
      if (i != j) table[i][j] = risk(results, algs[i], algs[j]);
    }
  }
  return table;
}

// Per-problem ranks (1..m, mid-rank ties) of the algorithms' mean final
// fitness, averaged across problems. Lower is better.
inline std::vector<double> average_ranking(const ResultMatrix& results) {
  results.require_complete();
  const auto& algs = results.algorithms();
  const auto& probs = results.problems();
  if (probs.empty()) throw std::invalid_argument("average_ranking: no problems");

  std::vector<double> accumulated(algs.size(), 0.0);
  for (const auto& problem : probs) {
    std::vector<double> means(algs.size());
    for (std::size_t i = 0; i < algs.size(); ++i) {
      const auto& t = results.trials(algs[i], problem);
      double m = 0.0;
      for (double v : t) m += v;
      means[i] = m / static_cast<double>(t.size());
    }
    const auto ranks = mid_ranks(means);
    for (std::size_t i = 0; i < algs.size(); ++i) accumulated[i] += ranks[i];
  }
  for (double& r : accumulated) r /= static_cast<double>(probs.size());
  return accumulated;
}

}  // namespace saea::stats
