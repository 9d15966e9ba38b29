#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "saea/core/problem.hpp"
#include "saea/core/rng.hpp"

namespace saea {

// One truly evaluated solution.
struct Sample {
  Point point;
  double fitness = 0.0;
  int evaluation_index = 0;      // 1-based order of true evaluation
  std::string proposer;          // constituent id, empty for initialization
};

// Append-only archive of truly evaluated samples. Owned by a single run;
// stored samples are never mutated or removed.
class Database {
 public:
  explicit Database(ProblemSpec spec) : spec_(std::move(spec)) { spec_.validate(); }

  const ProblemSpec& problem() const { return spec_; }
  std::size_t size() const { return samples_.size(); }
  bool empty() const { return samples_.empty(); }
  const std::vector<Sample>& samples() const { return samples_; }
  const Sample& operator[](std::size_t i) const { return samples_[i]; }

  const Sample& insert(Point point, double fitness, std::string proposer = {}) {
    if (!std::isfinite(fitness)) throw std::invalid_argument("database rejects non-finite fitness");
    if (!spec_.contains(point)) throw std::invalid_argument("database rejects out-of-domain point");
    Sample s;
    s.point = std::move(point);
    s.fitness = fitness;
    s.evaluation_index = static_cast<int>(samples_.size()) + 1;
    s.proposer = std::move(proposer);
    samples_.push_back(std::move(s));
    return samples_.back();
  }

  // Minimal fitness, ties broken by earliest evaluation.
  const Sample& best() const {
    if (samples_.empty()) throw std::logic_error("best() on empty database");
    const Sample* b = &samples_.front();
    for (const Sample& s : samples_) {
      if (s.fitness < b->fitness) b = &s;
    }
    return *b;
  }

  double min_distance_to(const Point& x) const {
    double best = std::numeric_limits<double>::infinity();
    for (const Sample& s : samples_) {
      const double d2 = squared_distance(s.point, x);
      if (d2 < best) best = d2;
    }
    return std::sqrt(best);
  }

 private:
  ProblemSpec spec_;
  std::vector<Sample> samples_;
};

// Points closer than this to an archived sample count as duplicates.
inline constexpr double kDuplicateDistance = 1e-12;

// Proposed points that coincide with an archived sample (or another point
// pending evaluation in the same generation) are nudged by uniform noise of
// 1e-8 times the domain width per coordinate before true evaluation, so that
// interpolation systems stay nonsingular.
inline Point separate_from_archive(const Database& db, std::span<const Point> pending, Point x,
                                   SeededRng& rng) {
  const ProblemSpec& spec = db.problem();
  auto too_close = [&](const Point& p) {
    if (db.min_distance_to(p) <= kDuplicateDistance) return true;
    for (const Point& q : pending) {
      if (distance(p, q) <= kDuplicateDistance) return true;
    }
    return false;
  };
  int guard = 0;
  while (too_close(x)) {
    for (std::size_t i = 0; i < spec.dimension; ++i) {
      x[i] += rng.uniform(-1.0, 1.0) * 1e-8 * spec.width(i);
    }
    x = spec.clamp(std::move(x));
    if (++guard > 1000) throw std::runtime_error("could not separate point from archive");
  }
  return x;
}

inline Point separate_from_archive(const Database& db, Point x, SeededRng& rng) {
  return separate_from_archive(db, {}, std::move(x), rng);
}

}  // namespace saea
