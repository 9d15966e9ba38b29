#pragma once

#include <cstddef>
#include <stdexcept>

namespace saea {

// True-evaluation accounting. The protocol budget is 5d evaluations total,
// of which 2d are spent on initialization.
class BudgetLedger {
 public:
  BudgetLedger(int max_evaluations, int init_evaluations)
      : max_(max_evaluations), init_(init_evaluations) {
    if (max_ <= 0 || init_ <= 0) throw std::invalid_argument("budget values must be positive");
    if (init_ >= max_) throw std::invalid_argument("initialization budget must be below the maximum");
  }

  static BudgetLedger for_dimension(std::size_t d) {
    return BudgetLedger(static_cast<int>(5 * d), static_cast<int>(2 * d));
  }

  int max_evaluations() const { return max_; }
  int init_evaluations() const { return init_; }
  int used_evaluations() const { return used_; }
  int remaining() const { return max_ - used_; }
  bool exhausted() const { return used_ >= max_; }

  void charge(int count = 1) {
    if (count < 0) throw std::invalid_argument("cannot charge a negative evaluation count");
    if (used_ + count > max_) throw std::logic_error("evaluation budget exceeded");
    used_ += count;
  }

 private:
  int max_;
  int init_;
  int used_ = 0;
};

}  // namespace saea
