#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "saea/core/database.hpp"
#include "saea/core/problem.hpp"
#include "saea/core/rng.hpp"

namespace saea {

// The 1-2 candidate points an algorithm nominates for true evaluation in one
// generation.
struct ProposalBatch {
  std::vector<Point> points;
  std::string proposer;
  std::string stage;  // e.g. "global"/"local" for the two-phase constituent

  void validate(const ProblemSpec& spec) const {
    if (points.empty() || points.size() > 2)
      throw std::logic_error("proposal batch must hold 1 or 2 points");
    for (const Point& p : points) {
      if (!spec.contains(p)) throw std::logic_error("proposal outside the domain");
    }
    if (points.size() == 2 && distance(points[0], points[1]) <= kDuplicateDistance)
      throw std::logic_error("proposal batch points must be distinct");
  }
};

// An individual-based SAEA: given the current database it proposes points for
// true evaluation and is told about every newly evaluated sample. It never
// calls the true objective itself.
class Constituent {
 public:
  virtual ~Constituent() = default;

  virtual std::string_view id() const = 0;

  // Pure in (state, db, rng state); consumes no true evaluations.
  virtual ProposalBatch propose(const Database& db, SeededRng& rng) = 0;

  // Called once per generation with that generation's newly evaluated
  // samples (possibly another constituent's) and the updated database.
  virtual void notify_result(const std::vector<Sample>& evaluated, const Database& db) = 0;

  virtual std::unique_ptr<Constituent> clone() const = 0;

  // Compact JSON-ish rendering of the internal state, for logging and
  // reproducibility checks.
  virtual std::string state_summary() const = 0;

 protected:
  static void require_database(const Database& db, std::size_t minimum) {
    if (db.size() < minimum)
      throw std::invalid_argument("database too small to propose from (" +
                                  std::to_string(db.size()) + " < " + std::to_string(minimum) + ")");
  }
};

}  // namespace saea
