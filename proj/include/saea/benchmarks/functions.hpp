#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "saea/core/problem.hpp"
#include "saea/core/rng.hpp"

namespace saea::bench {

enum class BaseFunction { Sphere, Griewank, Ackley, Rosenbrock, Rastrigin };

inline constexpr std::array<std::string_view, 5> kBenchmarkIds = {
    "sphere", "griewank", "ackley", "rosenbrock", "rastrigin"};

inline std::string_view base_function_id(BaseFunction f) {
  switch (f) {
    case BaseFunction::Sphere: return "sphere";
    case BaseFunction::Griewank: return "griewank";
    case BaseFunction::Ackley: return "ackley";
    case BaseFunction::Rosenbrock: return "rosenbrock";
    case BaseFunction::Rastrigin: return "rastrigin";
  }
  throw std::logic_error("unreachable");
}

inline std::optional<BaseFunction> parse_base_function(std::string_view id) {
  if (id == "sphere") return BaseFunction::Sphere;
  if (id == "griewank") return BaseFunction::Griewank;
  if (id == "ackley") return BaseFunction::Ackley;
  if (id == "rosenbrock") return BaseFunction::Rosenbrock;
  if (id == "rastrigin") return BaseFunction::Rastrigin;
  return std::nullopt;
}

// Symmetric box per base function (canonical literature domains).
inline std::pair<double, double> base_function_domain(BaseFunction f) {
  switch (f) {
    case BaseFunction::Sphere: return {-100.0, 100.0};
    case BaseFunction::Griewank: return {-600.0, 600.0};
    case BaseFunction::Ackley: return {-32.768, 32.768};
    case BaseFunction::Rosenbrock: return {-2.048, 2.048};
    case BaseFunction::Rastrigin: return {-5.12, 5.12};
  }
  throw std::logic_error("unreachable");
}

// Base function value at z; every base function has its minimum 0 at z = 0.
// Rosenbrock is pre-shifted (z -> z + 1) so that this holds for it as well.
inline double base_function_value(BaseFunction f, const Point& z) {
  const std::size_t d = z.size();
  switch (f) {
    case BaseFunction::Sphere: {
      double s = 0.0;
      for (double v : z) s += v * v;
      return s;
    }
    case BaseFunction::Griewank: {
      double sum = 0.0, prod = 1.0;
      for (std::size_t i = 0; i < d; ++i) {
        sum += z[i] * z[i] / 4000.0;
        prod *= std::cos(z[i] / std::sqrt(static_cast<double>(i + 1)));
      }
      return 1.0 + sum - prod;
    }
    case BaseFunction::Ackley: {
      constexpr double a = 20.0, b = 0.2, c = 2.0 * M_PI;
      double sq = 0.0, cs = 0.0;
      for (double v : z) {
        sq += v * v;
        cs += std::cos(c * v);
      }
      const double n = static_cast<double>(d);
      return -a * std::exp(-b * std::sqrt(sq / n)) - std::exp(cs / n) + a + std::exp(1.0);
    }
    case BaseFunction::Rosenbrock: {
      double s = 0.0;
      for (std::size_t i = 0; i + 1 < d; ++i) {
        const double wi = z[i] + 1.0;
        const double wn = z[i + 1] + 1.0;
        const double t = wn - wi * wi;
        s += 100.0 * t * t + z[i] * z[i];
      }
      return s;
    }
    case BaseFunction::Rastrigin: {
      double s = 10.0 * static_cast<double>(d);
      for (double v : z) s += v * v - 10.0 * std::cos(2.0 * M_PI * v);
      return s;
    }
  }
  throw std::logic_error("unreachable");
}

// A base function whose optimum has been relocated to `shift`; immutable and
// safe to evaluate concurrently.
class ShiftedObjective {
 public:
  ShiftedObjective(BaseFunction base, ProblemSpec spec) : base_(base), spec_(std::move(spec)) {
    spec_.validate();
  }

  BaseFunction base() const { return base_; }
  const ProblemSpec& problem() const { return spec_; }

  double evaluate(const Point& x) const {
    if (!spec_.contains(x)) throw std::invalid_argument("evaluation point outside the domain");
    Point z(spec_.dimension);
    for (std::size_t i = 0; i < spec_.dimension; ++i) z[i] = x[i] - spec_.shift[i];
    return base_function_value(base_, z);
  }

  double operator()(const Point& x) const { return evaluate(x); }

 private:
  BaseFunction base_;
  ProblemSpec spec_;
};

// Builds the shifted problem instance for a benchmark id. The shift is drawn
// uniformly from the central 80% of the box, deterministically in `seed`.
inline ShiftedObjective make_shifted(std::string_view base_id, std::size_t d, std::uint64_t seed) {
  const auto base = parse_base_function(base_id);
  if (!base) throw std::invalid_argument("unknown benchmark id: " + std::string(base_id));
  const auto [lo, hi] = base_function_domain(*base);

  ProblemSpec spec;
  spec.objective_id = std::string(base_id);
  spec.dimension = d;
  spec.lower.assign(d, lo);
  spec.upper.assign(d, hi);
  spec.shift.resize(d);
  SeededRng rng(seed);
  const double margin = 0.1 * (hi - lo);
  for (std::size_t i = 0; i < d; ++i) spec.shift[i] = rng.uniform(lo + margin, hi - margin);
  return ShiftedObjective(*base, std::move(spec));
}

}  // namespace saea::bench
