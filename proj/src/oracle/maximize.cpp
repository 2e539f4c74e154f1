#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include <boost/math/tools/minima.hpp>

#include "meanratio/oracle.hpp"
#include "surface.hpp"

namespace meanratio::oracle {

namespace {

// Half-width, in log units, of the bracket searched along one coordinate.
constexpr double kLineWindow = 3.0;
// Brent precision: half the mantissa is the most a quadratic fit can resolve.
constexpr int kLineBits = std::numeric_limits<double>::digits / 2;
// Keeps an AM-mode coordinate strictly below the remaining sum.
constexpr double kUpperMargin = 1e-12;

struct RestartOutcome {
  std::vector<double> y;
  double ratio = 0.0;
  std::size_t sweeps = 0;
  bool converged = false;
  std::vector<double> trace;
};

RestartOutcome ascend(const detail::ConstraintSurface& surface,
                      std::vector<double> y, const OracleConfig& config) {
  std::vector<double> scratch_y;
  std::vector<double> scratch_full;
  auto ratio_of = [&](const std::vector<double>& point) {
    surface.assemble(point, scratch_full);
    return mean_ratio(scratch_full);
  };

  RestartOutcome out;
  double current = ratio_of(y);
  if (y.size() < 2) {
    // A single free value is pinned by the constraint.
    out.y = std::move(y);
    out.ratio = current;
    out.converged = true;
    if (config.record_trace) out.trace.push_back(current);
    return out;
  }

  const double ceiling = surface.upper_limit() + std::log1p(-kUpperMargin);
  for (std::size_t sweep = 1; sweep <= config.max_iterations; ++sweep) {
    const double before = current;
    for (std::size_t j = 0; j < y.size(); ++j) {
      const double lo = y[j] - kLineWindow;
      const double hi = std::max(std::min(y[j] + kLineWindow, ceiling), y[j]);
      auto negated = [&](double value) {
        scratch_y = y;
        surface.move(scratch_y, j, value);
        return -ratio_of(scratch_y);
      };
      const auto [arg, best] =
          boost::math::tools::brent_find_minima(negated, lo, hi, kLineBits);
      if (-best > current) {
        surface.move(y, j, arg);
        current = ratio_of(y);
      }
    }
    out.sweeps = sweep;
    if (config.record_trace) out.trace.push_back(current);
    if (current - before <= config.step_tolerance * before) {
      out.converged = true;
      break;
    }
  }
  out.y = std::move(y);
  out.ratio = current;
  return out;
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + (stream + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void check(const OracleConfig& config) {
  if (config.restarts < 1) throw UsageError("oracle: restarts must be >= 1");
  if (config.max_iterations < 1) {
    throw UsageError("oracle: max_iterations must be >= 1");
  }
  if (!(config.step_tolerance > 0.0)) {
    throw UsageError("oracle: step_tolerance must be positive");
  }
}

OracleResult maximize_ratio(const KnownRatios& instance,
                            const OracleConfig& config) {
  check(config);
  if (Verdict v = validate(instance); !v) throw FeasibilityError(v.violation);
  if (instance.m() == instance.n) {
    throw DegenerateError("maximize_ratio: m = n leaves no free numbers");
  }
  const detail::ConstraintSurface surface(instance);

  std::vector<RestartOutcome> outcomes(config.restarts);
  auto run = [&](std::size_t index) {
    std::vector<double> start;
    if (index == 0) {
      start = surface.centre();
    } else {
      std::mt19937_64 rng(mix_seed(config.seed, index));
      start = surface.random_point(rng, 3.0);
    }
    outcomes[index] = ascend(surface, std::move(start), config);
  };

  std::size_t workers = config.parallelism;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, config.restarts);
  if (workers == 1) {
    for (std::size_t i = 0; i < config.restarts; ++i) run(i);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t i = w; i < config.restarts; i += workers) run(i);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  // Reduce in restart order; ties keep the lower index.
  OracleResult result;
  std::size_t best = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    result.iterations_used += outcomes[i].sweeps;
    if (outcomes[i].ratio > outcomes[best].ratio) best = i;
  }
  result.best_restart = best;
  result.converged = outcomes[best].converged;

  std::vector<double> full;
  surface.assemble(outcomes[best].y, full);
  result.argmax = Completion{.values = std::move(full),
                             .source_instance = instance};
  result.max_ratio = result.argmax.ratio();
  result.closed_form_bound = xia_bound(instance).value;
  result.gap = result.closed_form_bound - result.max_ratio;
  if (config.record_trace) {
    for (auto& o : outcomes) result.traces.push_back(std::move(o.trace));
  }
  return result;
}

}  // namespace meanratio::oracle
