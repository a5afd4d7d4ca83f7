#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pixhash/bithash.hpp"

namespace pixhash {

/// Normalised Hamming distance kept as an exact lattice point: numer differing
/// bits out of `bits`.
struct Distance {
  int numer = 0;
  int bits = 1;
  double value() const { return static_cast<double>(numer) / bits; }
};

/// popcount(a xor b) / length. Requires equal algorithm and length.
Distance hamming_norm(const BitHash& a, const BitHash& b);

/// One pairwise comparison sample.
struct ComparisonRecord {
  std::string id_a;
  std::string id_b;
  std::string algo;
  std::string modification;  // empty for inter-score records
  Distance distance;
};

struct DistStats {
  std::uint64_t n = 0;
  double mean = 0.0;
  double median = 0.0;
  double stdev = 0.0;  // sample, n-1 denominator
  double min = 0.0;
  double max = 0.0;
  double exact_match_frac = 0.0;
};

/// Summary of a plain distance sample (n >= 2).
DistStats dist_stats(std::span<const double> sample);

/// Exact, mergeable per-lattice-point tally of distances for one bit length.
/// Partial accumulators merge associatively, so parallel runs reduce to the
/// same result as serial ones.
class LatticeAccumulator {
 public:
  LatticeAccumulator() = default;
  explicit LatticeAccumulator(int bits) : bits_(bits), counts_(bits + 1, 0) {}

  int bits() const { return bits_; }
  std::uint64_t n() const { return n_; }
  const std::vector<std::uint64_t>& counts() const { return counts_; }

  void add(const Distance& d);
  void add_numer(int numer);
  void merge(const LatticeAccumulator& other);

  DistStats stats() const;  // throws InsufficientSample when n < 2

  /// Sample expanded to doubles, ordered by lattice point.
  std::vector<double> expand() const;

 private:
  int bits_ = 0;
  std::uint64_t n_ = 0;
  std::vector<std::uint64_t> counts_;
};

struct EquivalenceClass {
  std::size_t size = 0;
  std::vector<std::string> sample_ids;  // ascending, capped
};

struct EquivalenceReport {
  std::size_t total = 0;                   // images grouped
  std::vector<EquivalenceClass> classes;   // size desc, then lowest member id
  std::size_t count_over(std::size_t threshold) const;
};

/// Group hashes by exact value. All inputs must share one algorithm.
EquivalenceReport equivalence_classes(
    std::span<const std::pair<std::string, BitHash>> hashes, std::size_t sample_cap = 8);

/// Lattice-aligned histogram with a normal PDF fitted from the sample mean
/// and stdev, evaluated at the bin centres.
struct HistogramSeries {
  int bits = 0;
  int k_min = 0;  // first lattice point present
  std::vector<std::uint64_t> counts;  // one per lattice point k_min..k_max
  std::vector<double> npdf;
  double mean = 0.0;
  double stdev = 0.0;
  std::uint64_t n = 0;

  double centre(std::size_t i) const {
    return static_cast<double>(k_min + static_cast<int>(i)) / bits;
  }
};

HistogramSeries histogram_npdf(const LatticeAccumulator& acc);
HistogramSeries histogram_npdf(std::span<const double> sample, int bits);

struct RatePoint {
  double threshold = 0.0;
  double fpr = 0.0;  // fraction of inter distances <= threshold
  double fnr = 0.0;  // fraction of intra distances > threshold
};

std::vector<RatePoint> threshold_rates(std::span<const double> inter,
                                       std::span<const double> intra,
                                       std::span<const double> thresholds);

/// Same trade-off computed exactly from lattice tallies at every lattice point.
std::vector<RatePoint> threshold_rates(const LatticeAccumulator& inter,
                                       const LatticeAccumulator& intra);

}  // namespace pixhash
