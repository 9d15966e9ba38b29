#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace saea {

using Point = std::vector<double>;

// Box-constrained problem descriptor: dimension, per-coordinate bounds and
// the location of the (shifted) optimum.
struct ProblemSpec {
  std::string objective_id;
  std::size_t dimension = 0;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<double> shift;

  double width(std::size_t i) const { return upper[i] - lower[i]; }

  bool contains(const Point& x) const {
    if (x.size() != dimension) return false;
    for (std::size_t i = 0; i < dimension; ++i) {
      if (!(x[i] >= lower[i] && x[i] <= upper[i])) return false;
    }
    return true;
  }

  Point clamp(Point x) const {
    for (std::size_t i = 0; i < dimension; ++i) {
      if (x[i] < lower[i]) x[i] = lower[i];
      if (x[i] > upper[i]) x[i] = upper[i];
    }
    return x;
  }

  void validate() const {
    if (dimension == 0) throw std::invalid_argument("problem dimension must be positive");
    if (lower.size() != dimension || upper.size() != dimension)
      throw std::invalid_argument("bounds size does not match dimension");
    for (std::size_t i = 0; i < dimension; ++i) {
      if (!(lower[i] < upper[i]))
        throw std::invalid_argument("lower bound must be strictly below upper bound");
      if (!std::isfinite(lower[i]) || !std::isfinite(upper[i]))
        throw std::invalid_argument("bounds must be finite");
    }
    if (!shift.empty()) {
      if (shift.size() != dimension) throw std::invalid_argument("shift size does not match dimension");
      for (std::size_t i = 0; i < dimension; ++i) {
        if (!(shift[i] > lower[i] && shift[i] < upper[i]))
          throw std::invalid_argument("shift must lie strictly inside the domain");
      }
    }
  }
};

inline double squared_distance(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

inline double distance(const Point& a, const Point& b) { return std::sqrt(squared_distance(a, b)); }

}  // namespace saea
