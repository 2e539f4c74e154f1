#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace meanratio {

/// Which mean the known values are expressed against.
enum class Mode { RelativeToAM, RelativeToGM };

std::string_view to_string(Mode mode);

/// A problem instance: n positive numbers of which the first m are known as
/// multiples r_k of the arithmetic mean (AM mode) or the geometric mean (GM
/// mode).
struct KnownRatios {
  std::size_t n = 0;
  Mode mode = Mode::RelativeToAM;
  std::vector<double> ratios;

  std::size_t m() const { return ratios.size(); }
  std::size_t free_count() const { return n - ratios.size(); }
};

/// Positive weights λ_1..λ_m parameterizing the family of upper bounds.
struct LambdaVector {
  std::vector<double> values;
};

enum class Formula { Xia1, Xia2, Tung1, Tung2, TungGap, ObjectiveF, ObjectiveG };

std::string_view to_string(Formula formula);

/// A computed bound. For every formula except TungGap the value is an upper
/// bound on G_n/A_n; TungGap reports a lower bound on A_n - G_n.
struct BoundReport {
  double value = 0.0;
  Formula formula = Formula::Xia1;
  std::optional<LambdaVector> lambdas_used;
  KnownRatios instance;
  /// Set when the AM-mode remainder n - Σr vanishes within the feasibility
  /// tolerance; the value is then the limit as the free numbers go to zero.
  bool degenerate = false;
};

/// A full length-n assignment consistent with an instance, with the
/// reference mean normalized to 1.
struct Completion {
  std::vector<double> values;
  KnownRatios source_instance;

  /// Exact G_n/A_n of `values`.
  double ratio() const;
};

/// Outcome of validate(). `violation` names the first broken invariant.
struct Verdict {
  bool ok = true;
  bool degenerate = false;
  std::string violation;

  explicit operator bool() const { return ok; }
};

/// Relative tolerance used by the feasibility checks.
inline constexpr double kDefaultFeasibilityTolerance = 1e-9;

}  // namespace meanratio
