#include "meanratio/sweep.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include <fmt/format.h>

#include "meanratio/errors.hpp"

namespace meanratio {

void check(const SweepSpec& spec) {
  if (spec.n == 0) throw UsageError("sweep: n must be positive");
  if (!std::isfinite(spec.r1) || spec.r1 < 1.0) {
    throw UsageError("sweep: r1 must be >= 1");
  }
  if (!(spec.r2_start > 0.0) || !(spec.r2_start <= spec.r2_end) ||
      !(spec.r2_end <= 1.0)) {
    throw UsageError("sweep: need 0 < r2_start <= r2_end <= 1");
  }
  if (spec.points < 1 || (spec.points == 1 && spec.r2_start != spec.r2_end)) {
    throw UsageError("sweep: points must be >= 2 unless the range is a point");
  }
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
  check(spec);
  std::vector<double> grid(spec.points);
  if (spec.points == 1) {
    grid[0] = spec.r2_start;
    return grid;
  }
  const double span = spec.r2_end - spec.r2_start;
  const auto last = static_cast<double>(spec.points - 1);
  for (std::size_t i = 0; i + 1 < spec.points; ++i) {
    grid[i] = spec.r2_start + span * (static_cast<double>(i) / last);
  }
  grid.back() = spec.r2_end;
  return grid;
}

std::vector<oracle::DominanceRecord> run_sweep(const SweepSpec& spec) {
  return oracle::dominance_grid(spec.n, spec.mode, spec.r1, sweep_grid(spec));
}

std::string format_real(double value) { return fmt::format("{:.17g}", value); }

namespace {

std::string cell(const std::optional<double>& v) {
  return v ? format_real(*v) : std::string();
}

std::optional<double> parse_cell(const std::string& text) {
  if (text.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size()) {
    throw UsageError("sweep csv: bad number '" + text + "'");
  }
  return v;
}

}  // namespace

std::string render_sweep_csv(const std::vector<oracle::DominanceRecord>& rows) {
  std::string out(kSweepCsvHeader);
  out += '\n';
  for (const auto& row : rows) {
    out += fmt::format("{},{},{},{},{}\n", format_real(row.r2), cell(row.xia),
                       cell(row.tung), cell(row.margin),
                       row.domain_ok ? "true" : "false");
  }
  return out;
}

std::vector<oracle::DominanceRecord> parse_sweep_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kSweepCsvHeader) {
    throw UsageError("sweep csv: missing or unexpected header");
  }
  std::vector<oracle::DominanceRecord> rows;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::istringstream cells(line);
    std::string field;
    while (std::getline(cells, field, ',')) fields.push_back(field);
    if (fields.size() != 5) {
      throw UsageError("sweep csv: expected 5 fields in '" + line + "'");
    }
    oracle::DominanceRecord row;
    const auto r2 = parse_cell(fields[0]);
    if (!r2) throw UsageError("sweep csv: r2 is empty");
    row.r2 = *r2;
    row.xia = parse_cell(fields[1]);
    row.tung = parse_cell(fields[2]);
    row.margin = parse_cell(fields[3]);
    if (fields[4] == "true") {
      row.domain_ok = true;
    } else if (fields[4] != "false") {
      throw UsageError("sweep csv: domain_ok must be true or false");
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace meanratio
