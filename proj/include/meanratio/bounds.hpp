#pragma once

#include <cstddef>
#include <span>

#include "meanratio/errors.hpp"
#include "meanratio/types.hpp"

// Closed-form bounds on G_n/A_n when m of the n numbers are known relative to
// one of the means, together with the λ-parameterized objectives they are
// minima of, and the completions that attain them.
//
// Products, powers and roots are evaluated as sums of logarithms with a
// single final exponentiation, so n in the millions and ratios near the
// limits of double precision stay finite.

namespace meanratio {

/// Checks every KnownRatios invariant in order and reports the first one
/// violated. An AM-mode remainder n - Σr that is zero within `tolerance`
/// (relative to n) is accepted and flagged degenerate.
Verdict validate(const KnownRatios& instance,
                 double tolerance = kDefaultFeasibilityTolerance);

/// G_n/A_n of `values`. Throws DomainError on empty or nonpositive input.
/// Returns 0 only when the true ratio underflows double precision.
double mean_ratio(std::span<const double> values);

/// log(G_n/A_n); finite whenever the inputs are.
double log_mean_ratio(std::span<const double> values);

/// Sharp bound for AM-mode instances:
///   ((n - Σr)/(n - m))^(1 - m/n) · (Π r)^(1/n),
/// and (Π r)^(1/n) when m = n.
BoundReport xia_bound_am(const KnownRatios& instance,
                         double tolerance = kDefaultFeasibilityTolerance);

/// Sharp bound for GM-mode instances:
///   1 / ((1 - m/n)·(Π r)^(-1/(n-m)) + Σr/n),
/// and n/Σr when m = n.
BoundReport xia_bound_gm(const KnownRatios& instance,
                         double tolerance = kDefaultFeasibilityTolerance);

/// Dispatches on instance.mode.
BoundReport xia_bound(const KnownRatios& instance,
                      double tolerance = kDefaultFeasibilityTolerance);

/// f(λ) = (1/n)·Σ λ_k^(n-m) r_k + (n - Σr)/(n·Π λ). An upper bound on G_n/A_n
/// for every positive λ.
double objective_f(const KnownRatios& instance, const LambdaVector& lambdas);

/// g(λ) = 1 / (Π λ·(1 - (1/n)·Σ r_k λ_k^(n-m)) + Σr/n). Only an upper bound
/// while the denominator is positive; otherwise throws LambdaRegionError.
double objective_g(const KnownRatios& instance, const LambdaVector& lambdas);

/// The denominator of g(λ), exposed so callers can test the valid region
/// without catching.
double objective_g_denominator(const KnownRatios& instance,
                               const LambdaVector& lambdas);

/// Stationary point of objective_f; f there equals xia_bound_am.
LambdaVector optimal_lambdas_am(const KnownRatios& instance);

/// λ_i = r_i^(-1/(n-m)); g there equals xia_bound_gm.
LambdaVector optimal_lambdas_gm(const KnownRatios& instance);

/// Tung's bound restated for AM-relative extremes A = A_n·r1, a = A_n·r2:
/// 1 - (√r1 - √r2)²/n on 0 < r2 ≤ 1 ≤ r1 ≤ n - r2.
BoundReport tung_bound_am(std::size_t n, double r1, double r2);

/// Tung's bound restated for GM-relative extremes:
/// 1 / (1 + (√r1 - √r2)²/n) on 0 < r2 ≤ 1 ≤ r1.
BoundReport tung_bound_gm(std::size_t n, double r1, double r2);

/// Tung's lower bound (√largest - √smallest)²/n on A_n - G_n.
BoundReport tung_gap(std::size_t n, double largest, double smallest);

/// [r_1..r_m, t..t] with t = (n - Σr)/(n - m), so A_n = 1.
Completion extremal_completion_am(const KnownRatios& instance);

/// [r_1..r_m, t..t] with t = (Π r)^(-1/(n-m)), so G_n = 1.
Completion extremal_completion_gm(const KnownRatios& instance);

/// Dispatches on instance.mode.
Completion extremal_completion(const KnownRatios& instance);

}  // namespace meanratio
