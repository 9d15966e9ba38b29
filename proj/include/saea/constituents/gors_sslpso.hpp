#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "saea/constituents/constituent.hpp"
#include "saea/surrogate/rbf.hpp"

namespace saea::constituents {

// Surrogate-screened social-learning particle swarm with a restart strategy.
// Each propose call advances the swarm by one generation under the RBF
// prediction and nominates the best-predicted particle for true evaluation.
// The swarm restarts around random database samples after five notifications
// without improvement of the database best.
class GorsSslpso final : public Constituent {
 public:
  static constexpr int kRestartLimit = 5;
  static constexpr double kSocialBeta = 0.01;

  std::string_view id() const override { return "gors-sslpso"; }
  bool restart_pending() const { return restart_pending_; }

  ProposalBatch propose(const Database& db, SeededRng& rng) override {
    const ProblemSpec& spec = db.problem();
    require_database(db, spec.dimension + 1);
    const std::size_t d = spec.dimension;
    const std::size_t m = std::min<std::size_t>(2 * d, db.size());

    ProposalBatch batch;
    batch.proposer = std::string(id());
    batch.stage = "swarm";
    if (swarm_.empty()) {
      init_from_best(db, m);
    } else if (restart_pending_) {
      init_around_random(db, m, rng);
      restart_pending_ = false;
      batch.stage = "restart";
    }

    const auto model = surrogate::RbfModel::fit(db);

    // Rank by predicted fitness, best first.
    std::vector<double> predicted(swarm_.size());
    for (std::size_t i = 0; i < swarm_.size(); ++i) predicted[i] = model.predict(swarm_[i]);
    std::vector<std::size_t> order(swarm_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return predicted[a] < predicted[b]; });

    Point mean(d, 0.0);
    for (const Point& p : swarm_) {
      for (std::size_t k = 0; k < d; ++k) mean[k] += p[k];
    }
    for (std::size_t k = 0; k < d; ++k) mean[k] /= static_cast<double>(swarm_.size());

    // Social learning: every particle except the predicted best imitates a
    // random better-ranked particle per dimension, with a weak pull towards
    // the swarm mean.
    const double eps = kSocialBeta * static_cast<double>(d) / static_cast<double>(swarm_.size());
    for (std::size_t rank = swarm_.size(); rank-- > 1;) {
      const std::size_t i = order[rank];
      const std::size_t demo = order[rng.uniform_index(rank)];
      for (std::size_t k = 0; k < d; ++k) {
        const double r1 = rng.uniform01();
        const double r2 = rng.uniform01();
        const double r3 = rng.uniform01();
        velocity_[i][k] = r1 * velocity_[i][k] + r2 * (swarm_[demo][k] - swarm_[i][k]) +
                          r3 * eps * (mean[k] - swarm_[i][k]);
        swarm_[i][k] += velocity_[i][k];
      }
      swarm_[i] = spec.clamp(std::move(swarm_[i]));
    }

    std::size_t best = 0;
    double best_value = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < swarm_.size(); ++i) {
      const double v = model.predict(swarm_[i]);
      if (v < best_value) {
        best_value = v;
        best = i;
      }
    }
    batch.points.push_back(swarm_[best]);
    batch.validate(spec);
    return batch;
  }

  void notify_result(const std::vector<Sample>&, const Database& db) override {
    const double now = db.best().fitness;
    if (!std::isfinite(best_seen_)) {
      best_seen_ = now;
      return;
    }
    if (now < best_seen_) {
      non_improving_ = 0;
    } else if (++non_improving_ >= kRestartLimit) {
      restart_pending_ = true;
      non_improving_ = 0;
    }
    best_seen_ = now;
  }

  std::unique_ptr<Constituent> clone() const override { return std::make_unique<GorsSslpso>(*this); }

  std::string state_summary() const override {
    return "{\"swarm\":" + std::to_string(swarm_.size()) +
           ",\"non_improving\":" + std::to_string(non_improving_) +
           ",\"restart_pending\":" + (restart_pending_ ? std::string("true") : std::string("false")) +
           "}";
  }

 private:
  void init_from_best(const Database& db, std::size_t m) {
    std::vector<std::size_t> order(db.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return db[a].fitness < db[b].fitness;
    });
    swarm_.clear();
    for (std::size_t i = 0; i < m; ++i) swarm_.push_back(db[order[i]].point);
    velocity_.assign(m, Point(db.problem().dimension, 0.0));
  }

  void init_around_random(const Database& db, std::size_t m, SeededRng& rng) {
    const ProblemSpec& spec = db.problem();
    swarm_.clear();
    for (std::size_t i = 0; i < m; ++i) {
      Point p = db[rng.uniform_index(db.size())].point;
      for (std::size_t k = 0; k < spec.dimension; ++k)
        p[k] += rng.normal() * 0.05 * spec.width(k);
      swarm_.push_back(spec.clamp(std::move(p)));
    }
    velocity_.assign(m, Point(spec.dimension, 0.0));
  }

  std::vector<Point> swarm_;
  std::vector<Point> velocity_;
  int non_improving_ = 0;
  bool restart_pending_ = false;
  double best_seen_ = std::numeric_limits<double>::quiet_NaN();
};

}  // namespace saea::constituents
