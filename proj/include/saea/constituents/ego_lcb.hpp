#pragma once

#include <memory>

#include "saea/constituents/constituent.hpp"
#include "saea/optim/de.hpp"
#include "saea/surrogate/gp.hpp"

namespace saea::constituents {

// Efficient global optimization with a lower-confidence-bound acquisition:
// fits a Kriging model to the database and proposes the minimizer of
// mean - kappa * std, found by differential evolution.
class EgoLcb final : public Constituent {
 public:
  static constexpr double kKappa = 2.0;

  std::string_view id() const override { return "ego-lcb"; }

  ProposalBatch propose(const Database& db, SeededRng& rng) override {
    require_database(db, 2);
    const ProblemSpec& spec = db.problem();
    const auto model = surrogate::GpModel::fit(db);

    optim::DeConfig de;
    de.population = static_cast<int>(10 * spec.dimension);
    Point best = optim::minimize_de(
        [&](const Point& x) { return model.lcb(x, kKappa); }, spec.lower, spec.upper, de, rng);

    ProposalBatch batch;
    batch.proposer = std::string(id());
    batch.points.push_back(std::move(best));
    batch.validate(spec);
    return batch;
  }

  void notify_result(const std::vector<Sample>&, const Database&) override {
    // Stateless: the next proposal is determined by the database alone.
  }

  std::unique_ptr<Constituent> clone() const override { return std::make_unique<EgoLcb>(*this); }

  std::string state_summary() const override { return "{}"; }
};

}  // namespace saea::constituents
