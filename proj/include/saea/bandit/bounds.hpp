#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "saea/core/database.hpp"

namespace saea::bandit {

// Empirical fitness bounds (eLB, eUB) used to normalize raw fitness into
// [0,1] rewards. Maintained by the sliding-window rule: both bounds only
// ever move down.
struct EmpiricalBounds {
  double lower = 0.0;
  double upper = 0.0;
  int window = 1;  // sw; 2d under the protocol

  EmpiricalBounds() = default;
  EmpiricalBounds(double lower_bound, double upper_bound, int window_size)
      : lower(lower_bound), upper(upper_bound), window(window_size) {
    if (!(lower <= upper)) throw std::invalid_argument("empirical bounds require eLB <= eUB");
    if (window < 1) throw std::invalid_argument("sliding window must be >= 1");
  }

  // Bounds at t = 0: min/max fitness over the (initialization) database.
  static EmpiricalBounds from_database(const Database& db, int window_size) {
    if (db.empty()) throw std::invalid_argument("cannot initialize bounds from an empty database");
    double lo = db[0].fitness, hi = db[0].fitness;
    for (const Sample& s : db.samples()) {
      lo = std::min(lo, s.fitness);
      hi = std::max(hi, s.fitness);
    }
    return EmpiricalBounds(lo, hi, window_size);
  }
};

// reward = (eUB - f) / (eUB - eLB), clamped into [0,1] since the sliding
// window can move the bounds past an observed fitness. Degenerate bounds
// (eLB == eUB) grade the fitness against the single known level.
inline double normalize_reward(double fitness, const EmpiricalBounds& b) {
  if (b.upper == b.lower) return fitness <= b.lower ? 1.0 : 0.0;
  const double raw = (b.upper - fitness) / (b.upper - b.lower);
  return std::clamp(raw, 0.0, 1.0);
}

// Sliding-window bound update: take the best `window` fitness values in the
// database; each bound is replaced by the window's min/max only when that is
// lower than the current value. When the database is smaller than the window
// the whole database is used.
inline EmpiricalBounds update_bounds_sliding_window(const Database& db, EmpiricalBounds b) {
  if (db.empty()) throw std::invalid_argument("cannot update bounds from an empty database");
  std::vector<double> fitness;
  fitness.reserve(db.size());
  for (const Sample& s : db.samples()) fitness.push_back(s.fitness);

  const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(b.window), fitness.size());
  std::nth_element(fitness.begin(), fitness.begin() + (k - 1), fitness.end());
  const double window_max = fitness[k - 1];
  const double window_min = *std::min_element(fitness.begin(), fitness.begin() + k);

  if (b.lower > window_min) b.lower = window_min;
  if (b.upper > window_max) b.upper = window_max;
  return b;
}

}  // namespace saea::bandit
