#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "meanratio/bounds.hpp"
#include "meanratio/types.hpp"

// Independent numerical maximization of G_n/A_n over every completion of a
// known-ratio instance. Nothing here evaluates a closed form while searching;
// the search only ever calls mean_ratio() on full candidate vectors. The
// closed-form bound is looked up afterwards, for comparison only.

namespace meanratio::oracle {

struct OracleConfig {
  std::size_t restarts = 16;
  std::size_t max_iterations = 10'000;
  std::uint64_t seed = 0;
  /// Convergence threshold on the relative ratio gain of one full sweep.
  double step_tolerance = 1e-12;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  std::size_t parallelism = 0;
  /// Keep the per-iteration best ratio of every restart.
  bool record_trace = false;
};

/// Throws UsageError if `config` is unusable.
void check(const OracleConfig& config);

struct OracleResult {
  double max_ratio = 0.0;
  Completion argmax;
  double closed_form_bound = 0.0;
  /// closed_form_bound - max_ratio.
  double gap = 0.0;
  /// Sweeps summed over all restarts.
  std::size_t iterations_used = 0;
  /// Whether the winning restart met step_tolerance within its budget.
  bool converged = false;
  std::size_t best_restart = 0;
  /// Per restart, best ratio after each sweep; empty unless record_trace.
  std::vector<std::vector<double>> traces;
};

/// Seeded multi-restart projected coordinate ascent over the free block.
/// Restart 0 starts at the equal-value completion; the others start from
/// log-uniform draws on [-3, 3] projected onto the constraint surface.
/// Deterministic for a given seed regardless of parallelism.
OracleResult maximize_ratio(const KnownRatios& instance,
                            const OracleConfig& config = {});

struct SoundnessResult {
  std::size_t samples = 0;
  std::size_t violations = 0;
  double max_ratio = 0.0;
  double closed_form_bound = 0.0;
  /// closed_form_bound - max_ratio; negative means the bound was exceeded.
  double worst_gap = 0.0;
};

/// Ratio excess over the bound that counts as a violation.
inline constexpr double kViolationThreshold = 1e-12;

/// Draws `samples` random feasible completions and counts those whose ratio
/// exceeds the closed-form bound by more than kViolationThreshold.
SoundnessResult soundness_sweep(const KnownRatios& instance,
                                std::size_t samples, std::uint64_t seed);

/// Random feasible completion with the reference mean normalized to 1. The
/// free block is drawn log-uniform on [-spread, spread] and then rescaled
/// (AM: to the remaining sum; GM: to the remaining product).
Completion random_completion(const KnownRatios& instance, std::mt19937_64& rng,
                             double spread = 3.0);

struct DominanceRecord {
  double r2 = 0.0;
  std::optional<double> xia;
  std::optional<double> tung;
  /// tung - xia, present when both are.
  std::optional<double> margin;
  bool domain_ok = false;
};

/// Evaluates the sharp bound and the matching Tung bound for [r1, r2] at
/// every r2 in the grid. Points outside the Tung domain or the feasibility
/// region are flagged, not thrown.
std::vector<DominanceRecord> dominance_grid(std::size_t n, Mode mode,
                                            double r1,
                                            const std::vector<double>& r2_grid);

/// Uniform double in [0, 1) from the top 53 bits of a 64-bit engine draw.
/// Independent of the standard library's distribution implementations.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// SplitMix64 finalizer, used to derive independent per-stream seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace meanratio::oracle
