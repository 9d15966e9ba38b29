#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace saea::portfolio {

// One generation's selection: which constituent ran, how many true
// evaluations it consumed and (for the sequential frameworks) the normalized
// reward it was granted.
struct SelectionEvent {
  int generation = 0;  // 1-based, counting post-initialization generations
  std::string constituent;
  std::optional<double> reward;  // absent in the parallel framework
  int evaluations = 0;
};

// One optimization trajectory: the unit every statistic is computed from.
struct RunRecord {
  std::string framework;  // framework label; a constituent id for standalone runs
  std::string problem;
  std::size_t dimension = 0;
  std::uint64_t seed = 0;
  int trial = -1;  // harness trial index, -1 when run directly

  int init_evaluations = 0;
  int evaluations_used = 0;
  std::vector<double> best_so_far;  // indexed by true-evaluation count (1-based)
  std::vector<SelectionEvent> selections;
  double final_best = 0.0;
  double wall_time_seconds = 0.0;  // diagnostic, not part of the archived record

  void validate() const {
    if (best_so_far.size() != static_cast<std::size_t>(evaluations_used))
      throw std::logic_error("run record: curve length must equal the evaluations used");
    for (std::size_t i = 1; i < best_so_far.size(); ++i) {
      if (best_so_far[i] > best_so_far[i - 1])
        throw std::logic_error("run record: best-so-far curve must be non-increasing");
    }
    if (!best_so_far.empty() && best_so_far.back() != final_best)
      throw std::logic_error("run record: final best must close the curve");
    int framework_evals = 0;
    for (const SelectionEvent& e : selections) {
      if (e.evaluations < 1) throw std::logic_error("run record: empty selection event");
      if (e.reward && !(*e.reward >= 0.0 && *e.reward <= 1.0))
        throw std::logic_error("run record: reward outside [0,1]");
      framework_evals += e.evaluations;
    }
    if (framework_evals != evaluations_used - init_evaluations)
      throw std::logic_error("run record: selection log does not cover the framework evaluations");
  }
};

}  // namespace saea::portfolio
