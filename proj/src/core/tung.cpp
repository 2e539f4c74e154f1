#include <cmath>
#include <string>

#include "meanratio/bounds.hpp"

namespace meanratio {

namespace {

void check_extremes(std::size_t n, double r1, double r2) {
  if (n == 0) throw FeasibilityError("n must be positive");
  if (!std::isfinite(r1) || !std::isfinite(r2)) {
    throw FeasibilityError("r1 and r2 must be finite");
  }
  if (!(r2 > 0.0)) throw FeasibilityError("0 < r2 violated");
  if (!(r2 <= 1.0)) throw FeasibilityError("r2 ≤ 1 violated");
  if (!(1.0 <= r1)) throw FeasibilityError("1 ≤ r1 violated");
}

double squared_root_gap(double big, double small) {
  const double d = std::sqrt(big) - std::sqrt(small);
  return d * d;
}

}  // namespace

BoundReport tung_bound_am(std::size_t n, double r1, double r2) {
  check_extremes(n, r1, r2);
  if (!(r1 <= static_cast<double>(n) - r2)) {
    throw FeasibilityError("r1 ≤ n - r2 violated");
  }
  return BoundReport{
      .value = 1.0 - squared_root_gap(r1, r2) / static_cast<double>(n),
      .formula = Formula::Tung1,
      .instance = {.n = n, .mode = Mode::RelativeToAM, .ratios = {r1, r2}}};
}

BoundReport tung_bound_gm(std::size_t n, double r1, double r2) {
  check_extremes(n, r1, r2);
  return BoundReport{
      .value = 1.0 / (1.0 + squared_root_gap(r1, r2) / static_cast<double>(n)),
      .formula = Formula::Tung2,
      .instance = {.n = n, .mode = Mode::RelativeToGM, .ratios = {r1, r2}}};
}

BoundReport tung_gap(std::size_t n, double largest, double smallest) {
  if (n == 0) throw DomainError("tung_gap: n must be positive");
  if (!std::isfinite(largest) || !std::isfinite(smallest) ||
      !(smallest > 0.0)) {
    throw DomainError("tung_gap: extremes must be positive and finite");
  }
  if (smallest > largest) {
    throw DomainError("tung_gap: smallest exceeds largest");
  }
  // The instance field holds the raw extremes here, not ratios.
  return BoundReport{
      .value = squared_root_gap(largest, smallest) / static_cast<double>(n),
      .formula = Formula::TungGap,
      .instance = {.n = n, .mode = Mode::RelativeToAM,
                   .ratios = {largest, smallest}}};
}

}  // namespace meanratio
