#pragma once

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "saea/core/problem.hpp"
#include "saea/core/rng.hpp"

namespace saea::optim {

struct DeConfig {
  int population = 0;       // 0 -> 10 * dimension
  int generations = 50;
  double weight = 0.5;      // F
  double crossover = 0.9;   // CR
};

// rand/1/bin differential evolution over a box. Only ever applied to cheap
// surrogate surfaces, never to the true objective.
template <typename F>
Point minimize_de(F&& objective, const std::vector<double>& lower, const std::vector<double>& upper,
                  const DeConfig& config, SeededRng& rng) {
  const std::size_t d = lower.size();
  const std::size_t pop =
      config.population > 0 ? static_cast<std::size_t>(config.population) : 10 * d;

  std::vector<Point> population(pop, Point(d));
  std::vector<double> value(pop);
  for (std::size_t i = 0; i < pop; ++i) {
    for (std::size_t k = 0; k < d; ++k) population[i][k] = rng.uniform(lower[k], upper[k]);
    value[i] = objective(population[i]);
  }

  Point trial(d);
  for (int gen = 0; gen < config.generations; ++gen) {
    for (std::size_t i = 0; i < pop; ++i) {
      std::size_t r1, r2, r3;
      do { r1 = rng.uniform_index(pop); } while (r1 == i);
      do { r2 = rng.uniform_index(pop); } while (r2 == i || r2 == r1);
      do { r3 = rng.uniform_index(pop); } while (r3 == i || r3 == r1 || r3 == r2);

      const std::size_t jrand = rng.uniform_index(d);
      for (std::size_t k = 0; k < d; ++k) {
        if (k == jrand || rng.uniform01() < config.crossover) {
          double v = population[r1][k] + config.weight * (population[r2][k] - population[r3][k]);
          if (v < lower[k]) v = lower[k];
          if (v > upper[k]) v = upper[k];
          trial[k] = v;
        } else {
          trial[k] = population[i][k];
        }
      }
      const double tv = objective(trial);
      if (tv <= value[i]) {
        population[i] = trial;
        value[i] = tv;
      }
    }
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < pop; ++i) {
    if (value[i] < value[best]) best = i;
  }
  return population[best];
}

}  // namespace saea::optim
