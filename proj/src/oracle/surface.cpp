#include "surface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "meanratio/errors.hpp"
#include "meanratio/oracle.hpp"

namespace meanratio::oracle::detail {

namespace {

double log_sum_exp(const std::vector<double>& y, std::size_t skip) {
  double peak = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i != skip) peak = std::max(peak, y[i]);
  }
  long double acc = 0.0L;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i != skip) acc += std::exp(static_cast<long double>(y[i] - peak));
  }
  return peak + static_cast<double>(std::log(acc));
}

constexpr std::size_t kNoSkip = std::numeric_limits<std::size_t>::max();

}  // namespace

ConstraintSurface::ConstraintSurface(const KnownRatios& instance)
    : mode_(instance.mode),
      known_(instance.ratios),
      free_count_(instance.free_count()),
      upper_limit_(std::numeric_limits<double>::infinity()) {
  if (mode_ == Mode::RelativeToAM) {
    long double sum = 0.0L;
    for (double r : known_) sum += r;
    const long double remainder = static_cast<long double>(instance.n) - sum;
    if (!(remainder > 0.0L)) {
      throw FeasibilityError("no positive completion: n - Σr vanishes");
    }
    log_target_ = static_cast<double>(std::log(remainder));
    upper_limit_ = log_target_;
  } else {
    long double sum_logs = 0.0L;
    for (double r : known_) sum_logs += std::log(static_cast<long double>(r));
    log_sum_target_ = static_cast<double>(-sum_logs);
  }
}

void ConstraintSurface::project(std::vector<double>& y) const {
  double shift = 0.0;
  if (mode_ == Mode::RelativeToAM) {
    shift = log_target_ - log_sum_exp(y, kNoSkip);
  } else {
    long double sum = 0.0L;
    for (double v : y) sum += v;
    shift = static_cast<double>((log_sum_target_ - sum) /
                                static_cast<long double>(y.size()));
  }
  for (double& v : y) v += shift;
}

void ConstraintSurface::move(std::vector<double>& y, std::size_t j,
                             double value) const {
  double shift = 0.0;
  if (mode_ == Mode::RelativeToAM) {
    // Remaining mass S - exp(value) spread over the others in proportion.
    const double rest = std::log(-std::expm1(value - log_target_)) +
                        log_target_;
    shift = rest - log_sum_exp(y, j);
  } else {
    long double others = 0.0L;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (i != j) others += y[i];
    }
    shift = static_cast<double>((log_sum_target_ - value - others) /
                                static_cast<long double>(y.size() - 1));
  }
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i != j) y[i] += shift;
  }
  y[j] = value;
}

void ConstraintSurface::assemble(const std::vector<double>& y,
                                 std::vector<double>& out) const {
  out.resize(known_.size() + y.size());
  std::copy(known_.begin(), known_.end(), out.begin());
  std::transform(y.begin(), y.end(), out.begin() + known_.size(),
                 [](double v) { return std::exp(v); });
}

std::vector<double> ConstraintSurface::centre() const {
  std::vector<double> y(free_count_, 0.0);
  project(y);
  return y;
}

std::vector<double> ConstraintSurface::random_point(std::mt19937_64& rng,
                                                    double spread) const {
  std::vector<double> y(free_count_);
  for (double& v : y) v = spread * (2.0 * uniform01(rng) - 1.0);
  project(y);
  return y;
}

}  // namespace meanratio::oracle::detail
