#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "saea/core/database.hpp"
#include "saea/core/problem.hpp"
#include "saea/surrogate/scaling.hpp"

namespace saea::surrogate {

struct GpConfig {
  int length_scale_grid = 16;   // log-spaced candidates
  int signal_grid = 8;
  double nugget = 1e-8;         // relative to the signal variance
  double max_nugget = 1e-2;     // escalation cap on factorization failure
};

// Kriging interpolator with an isotropic squared-exponential kernel,
//   k(x, x') = sigma_f^2 * exp(-|x - x'|^2 / (2 l^2)),
// fit on inputs scaled to [0,1]^d and standardized outputs. Hyperparameters
// are selected by log marginal likelihood over a fixed grid; the nugget is
// escalated tenfold on Cholesky failure. Immutable once fit.
class GpModel {
 public:
  struct Prediction {
    double mean;
    double variance;
  };

  struct Hyperparameters {
    double length_scale;   // in scaled input units
    double signal_sq;      // in standardized output units
    double nugget;         // relative jitter actually used
  };

  static GpModel fit(const std::vector<Point>& xs, const std::vector<double>& ys,
                     const std::vector<double>& lower, const std::vector<double>& upper,
                     const GpConfig& config = {}) {
    if (xs.size() < 2) throw std::invalid_argument("gp fit needs at least 2 samples");
    if (xs.size() != ys.size()) throw std::invalid_argument("gp fit: point/value count mismatch");

    GpModel model;
    model.in_ = InputScaler(lower, upper);
    model.out_ = OutputScaler(ys);
    const std::size_t n = xs.size();
    const std::size_t d = model.in_.dimension();

    model.scaled_.reserve(n);
    for (const Point& x : xs) model.scaled_.push_back(model.in_.scale(x));

    Eigen::MatrixXd dist2(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      dist2(i, i) = 0.0;
      for (std::size_t j = i + 1; j < n; ++j) {
        const double d2 = squared_distance(model.scaled_[i], model.scaled_[j]);
        if (d2 <= kDuplicateDistance * kDuplicateDistance)
          throw std::invalid_argument("gp fit: duplicate training inputs");
        dist2(i, j) = dist2(j, i) = d2;
      }
    }

    Eigen::VectorXd y(n);
    for (std::size_t i = 0; i < n; ++i) y(static_cast<Eigen::Index>(i)) = model.out_.standardize(ys[i]);

    // Grid search maximizing the log marginal likelihood. Factoring
    // C(l) + delta*I once per length scale covers the whole signal grid,
    // since K = sigma^2 (C + delta I) gives
    //   -2 lml = q/sigma^2 + n ln sigma^2 + ln|C + delta I| + n ln 2pi,
    // with q = y^T (C + delta I)^{-1} y.
    const double sd = std::sqrt(static_cast<double>(d));
    const auto ell_grid = log_grid(0.05 * sd, 2.0 * sd, config.length_scale_grid);
    const auto sig_grid = log_grid(0.1, 10.0, config.signal_grid);

    double best_lml = -std::numeric_limits<double>::infinity();
    bool any = false;
    for (const double ell : ell_grid) {
      Eigen::MatrixXd corr =
          (-dist2 / (2.0 * ell * ell)).array().exp().matrix();

      double delta = config.nugget;
      Eigen::LLT<Eigen::MatrixXd> llt;
      for (;;) {
        Eigen::MatrixXd m = corr;
        m.diagonal().array() += delta;
        llt.compute(m);
        if (llt.info() == Eigen::Success) break;
        delta *= 10.0;
        if (delta > config.max_nugget) break;
      }
      if (llt.info() != Eigen::Success) continue;

      const Eigen::VectorXd alpha = llt.solve(y);
      const double q = y.dot(alpha);
      double logdet = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        logdet += 2.0 * std::log(llt.matrixL()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)));

      for (const double sig : sig_grid) {
        const double lml = -0.5 * (q / sig + static_cast<double>(n) * std::log(sig) + logdet +
                                   static_cast<double>(n) * std::log(2.0 * M_PI));
        if (lml > best_lml) {
          best_lml = lml;
          model.hyper_ = {ell, sig, delta};
          model.llt_ = llt;
          model.alpha_ = alpha;
          any = true;
        }
      }
    }
    if (!any)
      throw std::runtime_error(
          "gp fit: covariance matrix not positive definite at maximum nugget escalation");
    return model;
  }

  static GpModel fit(const Database& db, const GpConfig& config = {}) {
    std::vector<Point> xs;
    std::vector<double> ys;
    xs.reserve(db.size());
    ys.reserve(db.size());
    for (const Sample& s : db.samples()) {
      xs.push_back(s.point);
      ys.push_back(s.fitness);
    }
    return fit(xs, ys, db.problem().lower, db.problem().upper, config);
  }

  Prediction predict(const Point& x) const {
    for (double v : x) {
      if (!std::isfinite(v)) throw std::invalid_argument("gp predict: non-finite input");
    }
    const Point z = in_.scale(x);
    const std::size_t n = scaled_.size();
    Eigen::VectorXd c(n);
    const double inv = 1.0 / (2.0 * hyper_.length_scale * hyper_.length_scale);
    for (std::size_t i = 0; i < n; ++i)
      c(static_cast<Eigen::Index>(i)) = std::exp(-squared_distance(z, scaled_[i]) * inv);

    const double mean_std = c.dot(alpha_);
    // Predictive variance clamps the tiny negative values the subtraction
    // can produce in floating point.
    const double reduction = c.dot(llt_.solve(c));
    const double var_std = hyper_.signal_sq * std::max(0.0, 1.0 - reduction);

    return {out_.destandardize(mean_std), out_.scale() * out_.scale() * var_std};
  }

  double lcb(const Point& x, double kappa) const {
    if (kappa < 0.0) throw std::invalid_argument("lcb: kappa must be non-negative");
    const Prediction p = predict(x);
    return p.mean - kappa * std::sqrt(p.variance);
  }

  const Hyperparameters& hyperparameters() const { return hyper_; }
  // Signal variance in output units, for variance-contract checks.
  double signal_variance() const { return hyper_.signal_sq * out_.scale() * out_.scale(); }
  double output_mean() const { return out_.mean(); }
  double output_scale() const { return out_.scale(); }
  std::size_t training_size() const { return scaled_.size(); }

 private:
  GpModel() = default;

  static std::vector<double> log_grid(double lo, double hi, int count) {
    std::vector<double> g(static_cast<std::size_t>(count));
    if (count == 1) {
      g[0] = lo;
      return g;
    }
    const double step = (std::log(hi) - std::log(lo)) / static_cast<double>(count - 1);
    for (int i = 0; i < count; ++i) g[static_cast<std::size_t>(i)] = std::exp(std::log(lo) + step * i);
    return g;
  }

  InputScaler in_;
  OutputScaler out_;
  std::vector<Point> scaled_;
  Hyperparameters hyper_{};
  Eigen::LLT<Eigen::MatrixXd> llt_;
  Eigen::VectorXd alpha_;  // (C + delta I)^{-1} y_std; the signal cancels in the mean
};

}  // namespace saea::surrogate
