#include <algorithm>
#include <cmath>
#include <string>

#include "log_sums.hpp"
#include "meanratio/bounds.hpp"

namespace meanratio {

namespace {

void require_mode(const KnownRatios& instance, Mode mode, const char* op) {
  if (instance.mode != mode) {
    throw UsageError(std::string(op) + " requires a " +
                     std::string(to_string(mode)) + "-mode instance");
  }
}

Verdict require_feasible(const KnownRatios& instance, double tolerance) {
  Verdict verdict = validate(instance, tolerance);
  if (!verdict) throw FeasibilityError(verdict.violation);
  return verdict;
}

void require_free_numbers(const KnownRatios& instance, const char* op) {
  if (instance.m() == instance.n) {
    throw DegenerateError(std::string(op) +
                          ": m = n leaves no free numbers");
  }
}

// log of λ_k, checked positive and matched to the instance.
std::vector<long double> log_lambdas(const KnownRatios& instance,
                                     const LambdaVector& lambdas) {
  if (lambdas.values.size() != instance.m()) {
    throw UsageError("λ vector length does not match the number of ratios");
  }
  std::vector<long double> logs;
  logs.reserve(lambdas.values.size());
  for (double l : lambdas.values) {
    if (!std::isfinite(l) || l <= 0.0) {
      throw DomainError("λ entries must be positive and finite");
    }
    logs.push_back(std::log(static_cast<long double>(l)));
  }
  return logs;
}

// Σ r_k λ_k^(n-m), each term formed as exp((n-m) log λ_k + log r_k).
long double weighted_ratio_sum(const KnownRatios& instance,
                               const std::vector<long double>& log_lambda) {
  const auto power = static_cast<long double>(instance.free_count());
  long double acc = 0.0L;
  for (std::size_t k = 0; k < instance.m(); ++k) {
    acc += std::exp(power * log_lambda[k] +
                    std::log(static_cast<long double>(instance.ratios[k])));
  }
  return acc;
}

long double total(const std::vector<long double>& xs) {
  long double acc = 0.0L;
  for (long double x : xs) acc += x;
  return acc;
}

double clamp_to_unit(long double v) {
  return static_cast<double>(std::min(v, 1.0L));
}

}  // namespace

BoundReport xia_bound_am(const KnownRatios& instance, double tolerance) {
  require_mode(instance, Mode::RelativeToAM, "xia_bound_am");
  const Verdict verdict = require_feasible(instance, tolerance);

  const auto n = static_cast<long double>(instance.n);
  const auto m = static_cast<long double>(instance.m());
  const long double log_prod = detail::sum_logs(instance.ratios);

  BoundReport report{.formula = Formula::Xia1, .instance = instance};
  if (instance.m() == instance.n) {
    report.value = clamp_to_unit(std::exp(log_prod / n));
    return report;
  }

  report.degenerate = verdict.degenerate;
  const long double remainder = n - detail::sum(instance.ratios);
  if (remainder <= 0.0L) {
    report.value = 0.0;
    return report;
  }
  const long double log_value =
      (n - m) / n * std::log(remainder / (n - m)) + log_prod / n;
  report.value = clamp_to_unit(std::exp(log_value));
  return report;
}

BoundReport xia_bound_gm(const KnownRatios& instance, double tolerance) {
  require_mode(instance, Mode::RelativeToGM, "xia_bound_gm");
  require_feasible(instance, tolerance);

  const auto n = static_cast<long double>(instance.n);
  const auto m = static_cast<long double>(instance.m());
  const long double ratio_sum = detail::sum(instance.ratios);

  BoundReport report{.formula = Formula::Xia2, .instance = instance};
  if (instance.m() == instance.n) {
    report.value = clamp_to_unit(n / ratio_sum);
    return report;
  }

  // Denominator (1 - m/n)·t + Σr/n with t = (Π r)^(-1/(n-m)), in logs.
  const long double log_t = -detail::sum_logs(instance.ratios) / (n - m);
  const long double log_denominator =
      detail::log_add_exp(std::log(n - m) + log_t, std::log(ratio_sum)) -
      std::log(n);
  report.value = clamp_to_unit(std::exp(-log_denominator));
  return report;
}

BoundReport xia_bound(const KnownRatios& instance, double tolerance) {
  return instance.mode == Mode::RelativeToAM
             ? xia_bound_am(instance, tolerance)
             : xia_bound_gm(instance, tolerance);
}

double objective_f(const KnownRatios& instance, const LambdaVector& lambdas) {
  require_mode(instance, Mode::RelativeToAM, "objective_f");
  require_feasible(instance, kDefaultFeasibilityTolerance);
  require_free_numbers(instance, "objective_f");
  const auto logs = log_lambdas(instance, lambdas);

  const auto n = static_cast<long double>(instance.n);
  const long double remainder = n - detail::sum(instance.ratios);
  const long double value = weighted_ratio_sum(instance, logs) / n +
                            std::exp(-total(logs)) * remainder / n;
  return static_cast<double>(value);
}

double objective_g_denominator(const KnownRatios& instance,
                               const LambdaVector& lambdas) {
  require_mode(instance, Mode::RelativeToGM, "objective_g");
  require_feasible(instance, kDefaultFeasibilityTolerance);
  require_free_numbers(instance, "objective_g");
  const auto logs = log_lambdas(instance, lambdas);

  const auto n = static_cast<long double>(instance.n);
  const long double denominator =
      std::exp(total(logs)) * (1.0L - weighted_ratio_sum(instance, logs) / n) +
      detail::sum(instance.ratios) / n;
  return static_cast<double>(denominator);
}

double objective_g(const KnownRatios& instance, const LambdaVector& lambdas) {
  const double denominator = objective_g_denominator(instance, lambdas);
  if (!(denominator > 0.0)) {
    throw LambdaRegionError("λ outside the valid bound region");
  }
  return 1.0 / denominator;
}

LambdaVector optimal_lambdas_am(const KnownRatios& instance) {
  require_mode(instance, Mode::RelativeToAM, "optimal_lambdas_am");
  require_feasible(instance, kDefaultFeasibilityTolerance);
  require_free_numbers(instance, "optimal_lambdas_am");

  const auto n = static_cast<long double>(instance.n);
  const auto free = static_cast<long double>(instance.free_count());
  const long double remainder = n - detail::sum(instance.ratios);
  if (remainder <= 0.0L) {
    throw DegenerateError(
        "optimal_lambdas_am: remainder n - Σr vanishes, no stationary point");
  }
  const long double log_common =
      (std::log(remainder / free) + detail::sum_logs(instance.ratios) / free) /
      n;

  LambdaVector lambdas;
  lambdas.values.reserve(instance.m());
  for (double r : instance.ratios) {
    lambdas.values.push_back(static_cast<double>(
        std::exp(log_common - std::log(static_cast<long double>(r)) / free)));
  }
  return lambdas;
}

LambdaVector optimal_lambdas_gm(const KnownRatios& instance) {
  require_mode(instance, Mode::RelativeToGM, "optimal_lambdas_gm");
  require_feasible(instance, kDefaultFeasibilityTolerance);
  require_free_numbers(instance, "optimal_lambdas_gm");

  const auto free = static_cast<long double>(instance.free_count());
  LambdaVector lambdas;
  lambdas.values.reserve(instance.m());
  for (double r : instance.ratios) {
    lambdas.values.push_back(static_cast<double>(
        std::exp(-std::log(static_cast<long double>(r)) / free)));
  }
  return lambdas;
}

}  // namespace meanratio
