#pragma once

#include <array>
#include <chrono>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "saea/bandit/bounds.hpp"
#include "saea/bandit/ucb.hpp"
#include "saea/constituents/constituent.hpp"
#include "saea/core/budget.hpp"
#include "saea/core/database.hpp"
#include "saea/core/lhs.hpp"
#include "saea/core/problem.hpp"
#include "saea/core/rng.hpp"
#include "saea/portfolio/run_record.hpp"

namespace saea::portfolio {

enum class FrameworkKind { Par, Ucb, Rs, Eg50 };

inline constexpr std::array<std::string_view, 4> kFrameworkIds = {"par", "ucb", "rs", "eg50"};

inline std::string_view framework_id(FrameworkKind k) {
  switch (k) {
    case FrameworkKind::Par: return "par";
    case FrameworkKind::Ucb: return "ucb";
    case FrameworkKind::Rs: return "rs";
    case FrameworkKind::Eg50: return "eg50";
  }
  throw std::logic_error("unreachable");
}

inline std::optional<FrameworkKind> parse_framework(std::string_view id) {
  if (id == "par") return FrameworkKind::Par;
  if (id == "ucb") return FrameworkKind::Ucb;
  if (id == "rs") return FrameworkKind::Rs;
  if (id == "eg50") return FrameworkKind::Eg50;
  return std::nullopt;
}

// The expensive true objective. Frameworks are the only callers; every call
// is charged against the budget ledger.
using Objective = std::function<double(const Point&)>;

using ConstituentSet = std::vector<std::unique_ptr<Constituent>>;

namespace detail {

// Per-constituent substreams are keyed by constituent id so that adding or
// removing one constituent never perturbs the draws of the others.
inline std::vector<SeededRng> constituent_streams(const SeededRng& root,
                                                  const ConstituentSet& constituents) {
  std::vector<SeededRng> streams;
  streams.reserve(constituents.size());
  std::vector<std::string> seen;
  for (const auto& c : constituents) {
    std::string tag = "constituent/" + std::string(c->id());
    int occurrence = 0;
    for (const std::string& s : seen) {
      if (s == std::string(c->id())) ++occurrence;
    }
    seen.emplace_back(c->id());
    if (occurrence > 0) tag += "#" + std::to_string(occurrence);
    streams.push_back(root.derive(tag));
  }
  return streams;
}

struct RunState {
  Database db;
  BudgetLedger budget;
  std::vector<double> curve;
  double best = std::numeric_limits<double>::infinity();

  RunState(const ProblemSpec& spec, BudgetLedger ledger) : db(spec), budget(ledger) {}

  double evaluate(const Objective& objective, const Point& p) {
    budget.charge();
    const double f = objective(p);
    best = std::min(best, f);
    curve.push_back(best);
    return f;
  }
};

inline void initialize(RunState& run, const Objective& objective, SeededRng& rng_init) {
  const auto points =
      latin_hypercube_init(run.db.problem(), run.budget.init_evaluations(), rng_init);
  for (const Point& p : points) {
    const double f = run.evaluate(objective, p);
    run.db.insert(p, f);
  }
}

inline RunRecord finish(const RunState& run, std::string framework_label,
                        std::vector<SelectionEvent> selections,
                        std::chrono::steady_clock::time_point started) {
  RunRecord rec;
  rec.framework = std::move(framework_label);
  rec.problem = run.db.problem().objective_id;
  rec.dimension = run.db.problem().dimension;
  rec.init_evaluations = run.budget.init_evaluations();
  rec.evaluations_used = run.budget.used_evaluations();
  rec.best_so_far = run.curve;
  rec.selections = std::move(selections);
  rec.final_best = run.db.best().fitness;
  rec.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  rec.validate();
  return rec;
}

}  // namespace detail

// Parallel portfolio: every constituent proposes from the same frozen
// database snapshot each generation, all proposals are truly evaluated
// (truncated in registry order when the budget runs out) and the database is
// updated once at generation end. With a single constituent this is exactly
// the standalone run of that algorithm.
inline RunRecord run_par_ibsaea(const ProblemSpec& spec, const Objective& objective,
                                ConstituentSet& constituents, BudgetLedger budget,
                                std::uint64_t run_seed) {
  if (constituents.empty()) throw std::invalid_argument("portfolio needs at least one constituent");
  const auto started = std::chrono::steady_clock::now();
  SeededRng root(run_seed);
  SeededRng rng_init = root.derive("init");
  SeededRng rng_dedupe = root.derive("dedupe");
  auto streams = detail::constituent_streams(root, constituents);

  detail::RunState run(spec, budget);
  detail::initialize(run, objective, rng_init);

  std::vector<SelectionEvent> selections;
  int generation = 0;
  while (run.budget.remaining() > 0) {
    ++generation;
    std::vector<ProposalBatch> batches;
    batches.reserve(constituents.size());
    for (std::size_t i = 0; i < constituents.size(); ++i)
      batches.push_back(constituents[i]->propose(run.db, streams[i]));

    std::vector<Point> accepted;
    std::vector<std::size_t> owner;
    for (std::size_t i = 0; i < batches.size(); ++i) {
      for (Point& p : batches[i].points) {
        if (static_cast<int>(accepted.size()) >= run.budget.remaining()) break;
        accepted.push_back(separate_from_archive(run.db, accepted, std::move(p), rng_dedupe));
        owner.push_back(i);
      }
    }

    std::vector<Sample> evaluated;
    std::vector<int> per_constituent(constituents.size(), 0);
    for (std::size_t k = 0; k < accepted.size(); ++k) {
      const double f = run.evaluate(objective, accepted[k]);
      Sample s;
      s.point = accepted[k];
      s.fitness = f;
      s.proposer = std::string(constituents[owner[k]]->id());
      evaluated.push_back(std::move(s));
      per_constituent[owner[k]] += 1;
    }
    for (Sample& s : evaluated) {
      const Sample& stored = run.db.insert(s.point, s.fitness, s.proposer);
      s.evaluation_index = stored.evaluation_index;
    }
    for (std::size_t i = 0; i < constituents.size(); ++i) {
      if (per_constituent[i] > 0)
        selections.push_back({generation, std::string(constituents[i]->id()), std::nullopt,
                              per_constituent[i]});
    }
    for (auto& c : constituents) c->notify_result(evaluated, run.db);
  }
  return detail::finish(run, "par", std::move(selections), started);
}

namespace detail {

enum class SequentialPolicy { UcbTuned, Random, EpsilonGreedy };

// Common loop of the sequential frameworks: one constituent is selected per
// generation, its batch is truly evaluated, the reward is the normalized
// best fitness of the batch under the current empirical bounds, and the
// bounds are tightened afterwards by the sliding window. All constituents
// are bootstrapped round-robin before the policy takes over, and all of them
// observe every new sample.
inline RunRecord run_sequential(const ProblemSpec& spec, const Objective& objective,
                                ConstituentSet& constituents, BudgetLedger budget,
                                std::uint64_t run_seed, SequentialPolicy policy, double epsilon,
                                std::string label) {
  if (constituents.size() < 2)
    throw std::invalid_argument("sequential portfolio needs at least two constituents");
  const auto started = std::chrono::steady_clock::now();
  SeededRng root(run_seed);
  SeededRng rng_init = root.derive("init");
  SeededRng rng_dedupe = root.derive("dedupe");
  SeededRng rng_policy = root.derive("policy");
  auto streams = detail::constituent_streams(root, constituents);

  RunState run(spec, budget);
  initialize(run, objective, rng_init);

  const int window = static_cast<int>(2 * spec.dimension);
  auto bounds = saea::bandit::EmpiricalBounds::from_database(run.db, window);
  saea::bandit::BanditState bandit(constituents.size());

  std::vector<SelectionEvent> selections;
  int generation = 0;
  while (run.budget.remaining() > 0) {
    ++generation;
    std::size_t arm = 0;
    if (!bandit.all_pulled()) {
      arm = static_cast<std::size_t>(bandit.total_pulls) % constituents.size();
    } else {
      switch (policy) {
        case SequentialPolicy::UcbTuned:
          arm = saea::bandit::select_arm_ucb(bandit, rng_policy);
          break;
        case SequentialPolicy::Random:
          arm = saea::bandit::select_arm_random(constituents.size(), rng_policy);
          break;
        case SequentialPolicy::EpsilonGreedy:
          arm = saea::bandit::select_arm_epsilon_greedy(bandit, epsilon, rng_policy);
          break;
      }
    }

    ProposalBatch batch = constituents[arm]->propose(run.db, streams[arm]);
    std::vector<Point> accepted;
    for (Point& p : batch.points) {
      if (static_cast<int>(accepted.size()) >= run.budget.remaining()) break;
      accepted.push_back(separate_from_archive(run.db, accepted, std::move(p), rng_dedupe));
    }

    std::vector<Sample> evaluated;
    double batch_best = std::numeric_limits<double>::infinity();
    for (const Point& p : accepted) {
      const double f = run.evaluate(objective, p);
      batch_best = std::min(batch_best, f);
      Sample s;
      s.point = p;
      s.fitness = f;
      s.proposer = std::string(constituents[arm]->id());
      evaluated.push_back(std::move(s));
    }

    const double reward = saea::bandit::normalize_reward(batch_best, bounds);
    saea::bandit::record_pull(bandit, arm, reward);

    for (Sample& s : evaluated) {
      const Sample& stored = run.db.insert(s.point, s.fitness, s.proposer);
      s.evaluation_index = stored.evaluation_index;
    }
    bounds = saea::bandit::update_bounds_sliding_window(run.db, bounds);
    for (auto& c : constituents) c->notify_result(evaluated, run.db);

    selections.push_back({generation, std::string(constituents[arm]->id()), reward,
                          static_cast<int>(evaluated.size())});
  }
  return finish(run, std::move(label), std::move(selections), started);
}

}  // namespace detail

// Bandit-driven portfolio: a UCB-Tuned policy selects one constituent per
// generation.
inline RunRecord run_ucb_ibsaea(const ProblemSpec& spec, const Objective& objective,
                                ConstituentSet& constituents, BudgetLedger budget,
                                std::uint64_t run_seed) {
  return detail::run_sequential(spec, objective, constituents, budget, run_seed,
                                detail::SequentialPolicy::UcbTuned, 0.0, "ucb");
}

// Baseline selection frameworks: uniform random ("rs") and epsilon-greedy
// with epsilon = 0.5 ("eg50"). EG50 accrues the same normalized rewards as
// the UCB framework to drive its greedy arm.
inline RunRecord run_baseline(const ProblemSpec& spec, const Objective& objective,
                              ConstituentSet& constituents, BudgetLedger budget,
                              std::uint64_t run_seed, FrameworkKind policy) {
  switch (policy) {
    case FrameworkKind::Rs:
      return detail::run_sequential(spec, objective, constituents, budget, run_seed,
                                    detail::SequentialPolicy::Random, 0.0, "rs");
    case FrameworkKind::Eg50:
      return detail::run_sequential(spec, objective, constituents, budget, run_seed,
                                    detail::SequentialPolicy::EpsilonGreedy, 0.5, "eg50");
    default:
      throw std::invalid_argument("run_baseline expects the rs or eg50 policy");
  }
}

inline RunRecord run_framework(FrameworkKind kind, const ProblemSpec& spec,
                               const Objective& objective, ConstituentSet& constituents,
                               BudgetLedger budget, std::uint64_t run_seed) {
  switch (kind) {
    case FrameworkKind::Par:
      return run_par_ibsaea(spec, objective, constituents, budget, run_seed);
    case FrameworkKind::Ucb:
      return run_ucb_ibsaea(spec, objective, constituents, budget, run_seed);
    case FrameworkKind::Rs:
    case FrameworkKind::Eg50:
      return run_baseline(spec, objective, constituents, budget, run_seed, kind);
  }
  throw std::logic_error("unreachable");
}

}  // namespace saea::portfolio
