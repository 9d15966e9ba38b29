#pragma once

#include <cmath>
#include <limits>
#include <memory>
#include <string>

#include "saea/constituents/constituent.hpp"
#include "saea/optim/de.hpp"
#include "saea/surrogate/rbf.hpp"

namespace saea::constituents {

// Two-phase Voronoi-style SAEA. The global stage re-evaluates two solutions
// per generation: the surrogate minimizer plus a space-filling point. Once
// the database best stagnates it switches to a local stage that searches the
// Voronoi cell of the current best sample (approximated by Monte Carlo).
class Vesaea final : public Constituent {
 public:
  static constexpr double kImprovementTol = 1e-6;  // relative
  static constexpr int kStagnationLimit = 3;

  enum class Stage { Global, Local };

  std::string_view id() const override { return "vesaea"; }
  Stage stage() const { return stage_; }

  ProposalBatch propose(const Database& db, SeededRng& rng) override {
    const ProblemSpec& spec = db.problem();
    require_database(db, spec.dimension + 1);
    const auto model = surrogate::RbfModel::fit(db);

    ProposalBatch batch;
    batch.proposer = std::string(id());
    if (stage_ == Stage::Global) {
      batch.stage = "global";
      optim::DeConfig de;
      de.population = static_cast<int>(10 * spec.dimension);
      Point exploit = optim::minimize_de([&](const Point& x) { return model.predict(x); },
                                         spec.lower, spec.upper, de, rng);
      Point explore = most_isolated_candidate(db, rng);
      if (distance(exploit, explore) <= kDuplicateDistance) {
        for (std::size_t i = 0; i < spec.dimension; ++i)
          explore[i] += rng.uniform(-1.0, 1.0) * 1e-8 * spec.width(i);
        explore = spec.clamp(std::move(explore));
      }
      batch.points.push_back(std::move(exploit));
      batch.points.push_back(std::move(explore));
    } else {
      batch.stage = "local";
      batch.points.push_back(voronoi_cell_candidate(db, model, rng));
    }
    batch.validate(spec);
    return batch;
  }

  void notify_result(const std::vector<Sample>&, const Database& db) override {
    const double now = db.best().fitness;
    if (!std::isfinite(best_seen_)) {  // first notification sets the baseline
      best_seen_ = now;
      return;
    }
    const bool improved = (best_seen_ - now) > kImprovementTol * std::abs(best_seen_);
    if (improved) {
      stagnation_ = 0;
    } else if (++stagnation_ >= kStagnationLimit && stage_ == Stage::Global) {
      stage_ = Stage::Local;
    }
    best_seen_ = now;
  }

  std::unique_ptr<Constituent> clone() const override { return std::make_unique<Vesaea>(*this); }

  std::string state_summary() const override {
    return std::string("{\"stage\":\"") + (stage_ == Stage::Global ? "global" : "local") +
           "\",\"stagnation\":" + std::to_string(stagnation_) + "}";
  }

 private:
  // Among 100d uniform candidates, the one maximizing the distance to its
  // nearest archived sample.
  static Point most_isolated_candidate(const Database& db, SeededRng& rng) {
    const ProblemSpec& spec = db.problem();
    Point best;
    double best_gap = -1.0;
    const std::size_t count = 100 * spec.dimension;
    Point candidate(spec.dimension);
    for (std::size_t c = 0; c < count; ++c) {
      for (std::size_t i = 0; i < spec.dimension; ++i)
        candidate[i] = rng.uniform(spec.lower[i], spec.upper[i]);
      const double gap = db.min_distance_to(candidate);
      if (gap > best_gap) {
        best_gap = gap;
        best = candidate;
      }
    }
    return best;
  }

  // Monte Carlo approximation of the best sample's Voronoi cell: keep the
  // uniform candidates whose nearest archived neighbour is the best sample
  // and take the surrogate minimizer among them. Falls back to a Gaussian
  // perturbation of the best point when no candidate lands in the cell.
  static Point voronoi_cell_candidate(const Database& db, const surrogate::RbfModel& model,
                                      SeededRng& rng) {
    const ProblemSpec& spec = db.problem();
    const Sample& best = db.best();
    const std::size_t count = 100 * spec.dimension;

    Point chosen;
    double chosen_value = std::numeric_limits<double>::infinity();
    Point candidate(spec.dimension);
    for (std::size_t c = 0; c < count; ++c) {
      for (std::size_t i = 0; i < spec.dimension; ++i)
        candidate[i] = rng.uniform(spec.lower[i], spec.upper[i]);
      double nearest = std::numeric_limits<double>::infinity();
      const Sample* owner = nullptr;
      for (const Sample& s : db.samples()) {
        const double d2 = squared_distance(s.point, candidate);
        if (d2 < nearest) {
          nearest = d2;
          owner = &s;
        }
      }
      if (owner == &best) {
        const double v = model.predict(candidate);
        if (v < chosen_value) {
          chosen_value = v;
          chosen = candidate;
        }
      }
    }
    if (!chosen.empty()) return chosen;

    Point fallback(spec.dimension);
    for (std::size_t i = 0; i < spec.dimension; ++i)
      fallback[i] = best.point[i] + rng.normal() * 0.05 * spec.width(i);
    return spec.clamp(std::move(fallback));
  }

  Stage stage_ = Stage::Global;
  int stagnation_ = 0;
  double best_seen_ = std::numeric_limits<double>::quiet_NaN();
};

}  // namespace saea::constituents
