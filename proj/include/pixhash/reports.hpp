#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "pixhash/harness.hpp"
#include "pixhash/metrics.hpp"

namespace pixhash {

struct StatsRow {
  std::string algo;
  std::string modification;  // "-" for plain inter runs
  DistStats stats;
};

/// columns: algo, modification, n, mean, median, stdev, min, max, exact_match_pct
void write_stats_csv(const std::filesystem::path& path, const std::vector<StatsRow>& rows);
std::vector<StatsRow> read_stats_csv(const std::filesystem::path& path);

/// columns: k, distance, count, npdf
void write_histogram_csv(const std::filesystem::path& path, const HistogramSeries& h);
HistogramSeries read_histogram_csv(const std::filesystem::path& path);

/// Self-contained bar plot with the fitted normal overlay.
void write_histogram_svg(const std::filesystem::path& path, const HistogramSeries& h,
                         const std::string& title);

/// columns: threshold, fpr, fnr
void write_rates_csv(const std::filesystem::path& path, const std::vector<RatePoint>& rates);

/// columns: rank, size, share, sample_ids ('|'-separated)
void write_equivalence_csv(const std::filesystem::path& path, const EquivalenceReport& report);

/// Fixed-point rendering used everywhere in report output (4 decimals).
std::string format_fixed(double v);

}  // namespace pixhash
