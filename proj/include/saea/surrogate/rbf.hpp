#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "saea/core/database.hpp"
#include "saea/core/problem.hpp"
#include "saea/surrogate/scaling.hpp"

namespace saea::surrogate {

// Cubic radial basis interpolant |r|^3 with an appended linear polynomial
// tail, fit in scaled input space. Parameter-free and exact at the centers.
class RbfModel {
 public:
  static RbfModel fit(const std::vector<Point>& xs, const std::vector<double>& ys,
                      const std::vector<double>& lower, const std::vector<double>& upper) {
    if (xs.size() != ys.size()) throw std::invalid_argument("rbf fit: point/value count mismatch");
    RbfModel model;
    model.in_ = InputScaler(lower, upper);
    model.out_ = OutputScaler(ys);
    const std::size_t n = xs.size();
    const std::size_t d = model.in_.dimension();
    if (n < d + 1) throw std::invalid_argument("rbf fit needs at least d+1 samples for the linear tail");

    model.centers_.reserve(n);
    for (const Point& x : xs) model.centers_.push_back(model.in_.scale(x));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (squared_distance(model.centers_[i], model.centers_[j]) <=
            kDuplicateDistance * kDuplicateDistance)
          throw std::invalid_argument("rbf fit: duplicate training inputs");
      }
    }

    // Saddle system [Phi P; P^T 0] [w; c] = [y; 0] with P = [1 | X].
    const std::size_t m = n + d + 1;
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, m);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double r = distance(model.centers_[i], model.centers_[j]);
        a(i, j) = r * r * r;
      }
      a(i, n) = 1.0;
      a(n, i) = 1.0;
      for (std::size_t k = 0; k < d; ++k) {
        a(i, n + 1 + k) = model.centers_[i][k];
        a(n + 1 + k, i) = model.centers_[i][k];
      }
      rhs(static_cast<Eigen::Index>(i)) = model.out_.standardize(ys[i]);
    }

    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    if (!lu.isInvertible()) throw std::runtime_error("rbf fit: singular interpolation system");
    const Eigen::VectorXd coef = lu.solve(rhs);
    model.weights_.assign(coef.data(), coef.data() + n);
    model.tail_.assign(coef.data() + n, coef.data() + m);
    return model;
  }

  static RbfModel fit(const Database& db) {
    std::vector<Point> xs;
    std::vector<double> ys;
    xs.reserve(db.size());
    ys.reserve(db.size());
    for (const Sample& s : db.samples()) {
      xs.push_back(s.point);
      ys.push_back(s.fitness);
    }
    return fit(xs, ys, db.problem().lower, db.problem().upper);
  }

  double predict(const Point& x) const {
    const Point z = in_.scale(x);
    double s = tail_[0];
    for (std::size_t k = 0; k < z.size(); ++k) s += tail_[k + 1] * z[k];
    for (std::size_t i = 0; i < centers_.size(); ++i) {
      const double r = distance(z, centers_[i]);
      s += weights_[i] * r * r * r;
    }
    return out_.destandardize(s);
  }

  double operator()(const Point& x) const { return predict(x); }

  std::size_t training_size() const { return centers_.size(); }

 private:
  RbfModel() = default;

  InputScaler in_;
  OutputScaler out_;
  std::vector<Point> centers_;
  std::vector<double> weights_;
  std::vector<double> tail_;  // [c0, c1..cd]
};

}  // namespace saea::surrogate
