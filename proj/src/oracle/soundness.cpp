#include <algorithm>

#include "meanratio/oracle.hpp"
#include "surface.hpp"

namespace meanratio::oracle {

Completion random_completion(const KnownRatios& instance, std::mt19937_64& rng,
                             double spread) {
  const detail::ConstraintSurface surface(instance);
  Completion c{.source_instance = instance};
  surface.assemble(surface.random_point(rng, spread), c.values);
  return c;
}

SoundnessResult soundness_sweep(const KnownRatios& instance,
                                std::size_t samples, std::uint64_t seed) {
  if (samples < 1) throw UsageError("soundness_sweep: samples must be >= 1");
  if (Verdict v = validate(instance); !v) throw FeasibilityError(v.violation);
  if (instance.m() == instance.n) {
    throw DegenerateError("soundness_sweep: m = n leaves no free numbers");
  }
  const detail::ConstraintSurface surface(instance);

  SoundnessResult result{.samples = samples,
                         .closed_form_bound = xia_bound(instance).value};
  std::mt19937_64 rng(mix_seed(seed, 0));
  std::vector<double> full;
  for (std::size_t s = 0; s < samples; ++s) {
    surface.assemble(surface.random_point(rng, 3.0), full);
    const double ratio = mean_ratio(full);
    if (ratio > result.closed_form_bound + kViolationThreshold) {
      ++result.violations;
    }
    result.max_ratio = std::max(result.max_ratio, ratio);
  }
  result.worst_gap = result.closed_form_bound - result.max_ratio;
  return result;
}

}  // namespace meanratio::oracle
