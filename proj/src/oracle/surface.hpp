#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "meanratio/types.hpp"

namespace meanratio::oracle::detail {

// The set of completions of an instance, with the reference mean fixed at 1,
// parameterized by the logs y_j of the n - m free values:
//   AM mode: Σ exp(y_j) = n - Σr   (linear in the free values)
//   GM mode: Σ y_j = -Σ log r      (linear in their logs)
// Both are one condition, so projection is an exact uniform shift of y.
class ConstraintSurface {
 public:
  explicit ConstraintSurface(const KnownRatios& instance);

  std::size_t free_count() const { return free_count_; }

  // Shifts all of y uniformly onto the surface.
  void project(std::vector<double>& y) const;

  // Sets y[j] = value and shifts every other entry uniformly so the result
  // stays on the surface. Requires free_count() >= 2.
  void move(std::vector<double>& y, std::size_t j, double value) const;

  // Largest admissible y[j] (exclusive); +inf in GM mode.
  double upper_limit() const { return upper_limit_; }

  // Known ratios followed by exp(y).
  void assemble(const std::vector<double>& y, std::vector<double>& out) const;

  // Equal free values.
  std::vector<double> centre() const;

  // Log-uniform free values on [-spread, spread], projected.
  std::vector<double> random_point(std::mt19937_64& rng, double spread) const;

 private:
  Mode mode_;
  std::vector<double> known_;
  std::size_t free_count_;
  double log_target_ = 0.0;  // AM: log(n - Σr)
  double log_sum_target_ = 0.0;  // GM: -Σ log r
  double upper_limit_;
};

}  // namespace meanratio::oracle::detail
