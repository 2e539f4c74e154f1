#include <cmath>
#include <string>

#include "log_sums.hpp"
#include "meanratio/bounds.hpp"

namespace meanratio {

namespace {

Verdict violation(std::string what) {
  return Verdict{.ok = false, .degenerate = false, .violation = std::move(what)};
}

}  // namespace

Verdict validate(const KnownRatios& instance, double tolerance) {
  const std::size_t n = instance.n;
  const std::size_t m = instance.m();
  if (n == 0) return violation("n must be positive");
  if (m == 0) return violation("no known ratios (m = 0)");
  if (m > n) return violation("more ratios than numbers (m > n)");
  for (std::size_t k = 0; k < m; ++k) {
    const double r = instance.ratios[k];
    if (!std::isfinite(r) || r <= 0.0) {
      return violation("ratio r_" + std::to_string(k + 1) +
                       " is not a positive finite number");
    }
  }

  const auto nd = static_cast<long double>(n);
  if (instance.mode == Mode::RelativeToAM) {
    const long double excess = detail::sum(instance.ratios) - nd;
    if (m == n) {
      if (std::fabs(excess) > tolerance * nd) {
        return violation("sum of ratios ≠ n with m = n");
      }
      return {};
    }
    if (excess > tolerance * nd) return violation("sum of ratios ≥ n");
    if (excess >= -tolerance * nd) {
      return Verdict{.ok = true, .degenerate = true, .violation = {}};
    }
    return {};
  }

  if (m == n && std::fabs(detail::sum_logs(instance.ratios)) > tolerance) {
    return violation("product of ratios ≠ 1 with m = n");
  }
  return {};
}

}  // namespace meanratio
