#include <cmath>
#include <string>

#include "log_sums.hpp"
#include "meanratio/bounds.hpp"

namespace meanratio {

namespace {

Completion fill(const KnownRatios& instance, double free_value) {
  Completion c{.values = instance.ratios, .source_instance = instance};
  c.values.resize(instance.n, free_value);
  return c;
}

void check(const KnownRatios& instance, Mode mode, const char* op) {
  if (instance.mode != mode) {
    throw UsageError(std::string(op) + " requires a " +
                     std::string(to_string(mode)) + "-mode instance");
  }
  if (Verdict v = validate(instance); !v) throw FeasibilityError(v.violation);
  if (instance.m() == instance.n) {
    throw DegenerateError(std::string(op) +
                          ": m = n, the completion is the known values");
  }
}

}  // namespace

Completion extremal_completion_am(const KnownRatios& instance) {
  check(instance, Mode::RelativeToAM, "extremal_completion_am");
  const auto n = static_cast<long double>(instance.n);
  const long double remainder = n - detail::sum(instance.ratios);
  if (remainder <= 0.0L) {
    throw DegenerateError(
        "extremal_completion_am: remainder n - Σr vanishes, no positive "
        "completion");
  }
  return fill(instance, static_cast<double>(
                            remainder / static_cast<long double>(
                                            instance.free_count())));
}

Completion extremal_completion_gm(const KnownRatios& instance) {
  check(instance, Mode::RelativeToGM, "extremal_completion_gm");
  const long double log_t = -detail::sum_logs(instance.ratios) /
                            static_cast<long double>(instance.free_count());
  return fill(instance, static_cast<double>(std::exp(log_t)));
}

Completion extremal_completion(const KnownRatios& instance) {
  return instance.mode == Mode::RelativeToAM ? extremal_completion_am(instance)
                                             : extremal_completion_gm(instance);
}

}  // namespace meanratio
