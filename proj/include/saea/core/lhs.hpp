#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "saea/core/problem.hpp"
#include "saea/core/rng.hpp"

namespace saea {

// Latin hypercube design: for every dimension the `count` points occupy
// distinct equal-width strata, with an independent random permutation per
// dimension and uniform jitter inside each stratum.
inline std::vector<Point> latin_hypercube_init(const ProblemSpec& spec, int count, SeededRng& rng) {
  spec.validate();
  if (count < 1) throw std::invalid_argument("latin hypercube sample count must be >= 1");

  const std::size_t d = spec.dimension;
  std::vector<Point> points(static_cast<std::size_t>(count), Point(d, 0.0));
  std::vector<std::size_t> perm(static_cast<std::size_t>(count));
  for (std::size_t dim = 0; dim < d; ++dim) {
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t k = perm.size(); k > 1; --k) {  // Fisher-Yates
      std::swap(perm[k - 1], perm[rng.uniform_index(k)]);
    }
    for (std::size_t k = 0; k < perm.size(); ++k) {
      const double u = rng.uniform01();
      const double stratum = (static_cast<double>(perm[k]) + u) / static_cast<double>(count);
      points[k][dim] = spec.lower[dim] + stratum * spec.width(dim);
    }
  }
  return points;
}

}  // namespace saea
