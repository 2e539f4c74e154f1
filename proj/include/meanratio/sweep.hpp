#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "meanratio/oracle.hpp"
#include "meanratio/types.hpp"

namespace meanratio {

enum class OutputFormat { CSV, JSON };

/// A Fig.-1-style comparison grid: r1 fixed, r2 uniform on [r2_start, r2_end]
/// inclusive of both endpoints.
struct SweepSpec {
  std::size_t n = 0;
  Mode mode = Mode::RelativeToAM;
  double r1 = 1.0;
  double r2_start = 1.0;
  double r2_end = 1.0;
  std::size_t points = 2;
  OutputFormat output_format = OutputFormat::CSV;
};

/// Throws UsageError when the spec is malformed. A single point is allowed
/// only when r2_start == r2_end.
void check(const SweepSpec& spec);

/// Ascending grid; the last entry is r2_end exactly.
std::vector<double> sweep_grid(const SweepSpec& spec);

/// Runs dominance_grid over sweep_grid(spec).
std::vector<oracle::DominanceRecord> run_sweep(const SweepSpec& spec);

inline constexpr std::string_view kSweepCsvHeader =
    "r2,xia_bound,tung_bound,margin,domain_ok";

/// 17 significant digits, enough to round-trip any double.
std::string format_real(double value);

/// Header plus one row per record. Values that do not exist for a point are
/// left empty.
std::string render_sweep_csv(const std::vector<oracle::DominanceRecord>& rows);

/// Inverse of render_sweep_csv. Throws UsageError on malformed text.
std::vector<oracle::DominanceRecord> parse_sweep_csv(std::string_view text);

}  // namespace meanratio
