#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "saea/core/problem.hpp"

namespace saea::surrogate {

// Affine map from a box domain onto [0,1]^d. Both surrogate types fit in
// scaled space for conditioning.
class InputScaler {
 public:
  InputScaler() = default;
  InputScaler(std::vector<double> lower, std::vector<double> upper)
      : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.size() != upper_.size() || lower_.empty())
      throw std::invalid_argument("input scaler needs matching non-empty bounds");
    for (std::size_t i = 0; i < lower_.size(); ++i) {
      if (!(lower_[i] < upper_[i])) throw std::invalid_argument("degenerate box for input scaler");
    }
  }

  std::size_t dimension() const { return lower_.size(); }

  Point scale(const Point& x) const {
    Point z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = (x[i] - lower_[i]) / (upper_[i] - lower_[i]);
    return z;
  }

 private:
  std::vector<double> lower_, upper_;
};

// Zero-mean unit-variance transform of the training outputs; falls back to
// identity scale when the outputs are (numerically) constant.
class OutputScaler {
 public:
  OutputScaler() = default;
  explicit OutputScaler(const std::vector<double>& ys) {
    if (ys.empty()) throw std::invalid_argument("output scaler needs samples");
    double m = 0.0;
    for (double y : ys) m += y;
    mean_ = m / static_cast<double>(ys.size());
    double v = 0.0;
    for (double y : ys) v += (y - mean_) * (y - mean_);
    scale_ = std::sqrt(v / static_cast<double>(ys.size()));
    if (scale_ < 1e-12 * std::max(1.0, std::abs(mean_))) scale_ = 1.0;
  }

  double mean() const { return mean_; }
  double scale() const { return scale_; }
  double standardize(double y) const { return (y - mean_) / scale_; }
  double destandardize(double z) const { return mean_ + scale_ * z; }

 private:
  double mean_ = 0.0;
  double scale_ = 1.0;
};

}  // namespace saea::surrogate
