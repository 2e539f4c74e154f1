#include <algorithm>
#include <cmath>
#include <limits>

#include "meanratio/bounds.hpp"

namespace meanratio {

double log_mean_ratio(std::span<const double> values) {
  if (values.empty()) throw DomainError("mean_ratio: empty input");
  double largest = 0.0;
  for (double a : values) {
    if (!std::isfinite(a) || a <= 0.0) {
      throw DomainError("mean_ratio: values must be positive and finite");
    }
    largest = std::max(largest, a);
  }

  // Work with a_k / max so both means are scale-free and nothing overflows.
  const double log_largest = std::log(largest);
  long double sum_scaled = 0.0L;
  long double sum_log_scaled = 0.0L;
  for (double a : values) {
    const double q = a / largest;
    sum_scaled += q;
    if (q >= std::numeric_limits<double>::min()) {
      sum_log_scaled += std::log(static_cast<long double>(q));
    } else {
      sum_log_scaled += std::log(static_cast<long double>(a)) - log_largest;
    }
  }
  const auto nd = static_cast<long double>(values.size());
  const long double log_g = sum_log_scaled / nd;
  const long double log_a = std::log(sum_scaled / nd);
  return static_cast<double>(std::min(log_g - log_a, 0.0L));
}

double mean_ratio(std::span<const double> values) {
  return std::exp(log_mean_ratio(values));
}

}  // namespace meanratio
