#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>

#include "pixhash/metrics.hpp"
#include "stat_util.hpp"

namespace pixhash {

Distance hamming_norm(const BitHash& a, const BitHash& b) {
  if (a.name != b.name) {
    throw AlgorithmMismatch("cannot compare " + a.name + " hash with " + b.name + " hash");
  }
  if (a.bit_length != b.bit_length || a.bytes.size() != b.bytes.size()) {
    throw LengthMismatch("cannot compare " + std::to_string(a.bit_length) + "-bit hash with " +
                         std::to_string(b.bit_length) + "-bit hash");
  }
  int diff = 0;
  for (std::size_t i = 0; i < a.bytes.size(); ++i) {
    diff += std::popcount(static_cast<unsigned>(a.bytes[i] ^ b.bytes[i]));
  }
  return Distance{diff, a.bit_length};
}

DistStats dist_stats(std::span<const double> sample) {
  if (sample.size() < 2) throw InsufficientSample("need at least 2 distances");
  DistStats s;
  s.n = sample.size();
  double sum = 0.0, sum2 = 0.0;
  s.min = sample[0];
  s.max = sample[0];
  std::uint64_t zeros = 0;
  for (double d : sample) {
    sum += d;
    sum2 += d * d;
    s.min = std::min(s.min, d);
    s.max = std::max(s.max, d);
    if (d == 0.0) ++zeros;
  }
  const double n = static_cast<double>(s.n);
  s.mean = sum / n;
  const double var = std::max(0.0, (sum2 - sum * sum / n) / (n - 1.0));
  s.stdev = std::sqrt(var);
  s.median = median_of(std::vector<double>(sample.begin(), sample.end()));
  s.exact_match_frac = static_cast<double>(zeros) / n;
  return s;
}

void LatticeAccumulator::add(const Distance& d) {
  if (d.bits != bits_) throw LengthMismatch("distance lattice mismatch");
  add_numer(d.numer);
}

void LatticeAccumulator::add_numer(int numer) {
  ++counts_[static_cast<std::size_t>(numer)];
  ++n_;
}

void LatticeAccumulator::merge(const LatticeAccumulator& other) {
  if (other.bits_ != bits_) throw LengthMismatch("cannot merge different lattices");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  n_ += other.n_;
}

DistStats LatticeAccumulator::stats() const {
  if (n_ < 2) throw InsufficientSample("need at least 2 distances");
  DistStats s;
  s.n = n_;

  // All moments from exact integer tallies.
  std::uint64_t s1 = 0;  // sum of numerators
  double s2 = 0.0;       // sum of squared numerators (integers, exact in double)
  int kmin = -1, kmax = 0;
  for (int k = 0; k <= bits_; ++k) {
    const std::uint64_t c = counts_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (kmin < 0) kmin = k;
    kmax = k;
    s1 += c * static_cast<std::uint64_t>(k);
    s2 += static_cast<double>(c) * k * k;
  }
  const double n = static_cast<double>(n_);
  const double l = static_cast<double>(bits_);
  s.mean = static_cast<double>(s1) / (n * l);
  const double var_num = std::max(0.0, s2 - static_cast<double>(s1) * s1 / n);
  s.stdev = std::sqrt(var_num / (n - 1.0)) / l;
  s.min = kmin / l;
  s.max = kmax / l;
  s.exact_match_frac = static_cast<double>(counts_[0]) / n;

  // Median: central order statistics via the cumulative tally.
  const std::uint64_t lo_pos = (n_ + 1) / 2;  // 1-based
  const std::uint64_t hi_pos = n_ / 2 + 1;
  int lo_k = -1, hi_k = -1;
  std::uint64_t cum = 0;
  for (int k = 0; k <= bits_; ++k) {
    cum += counts_[static_cast<std::size_t>(k)];
    if (lo_k < 0 && cum >= lo_pos) lo_k = k;
    if (hi_k < 0 && cum >= hi_pos) {
      hi_k = k;
      break;
    }
  }
  s.median = (lo_k + hi_k) / (2.0 * l);
  return s;
}

std::vector<double> LatticeAccumulator::expand() const {
  std::vector<double> out;
  out.reserve(n_);
  for (int k = 0; k <= bits_; ++k) {
    const double v = static_cast<double>(k) / bits_;
    for (std::uint64_t i = 0; i < counts_[static_cast<std::size_t>(k)]; ++i) out.push_back(v);
  }
  return out;
}

std::size_t EquivalenceReport::count_over(std::size_t threshold) const {
  std::size_t n = 0;
  for (const auto& c : classes) {
    if (c.size > threshold) ++n;
  }
  return n;
}

EquivalenceReport equivalence_classes(
    std::span<const std::pair<std::string, BitHash>> hashes, std::size_t sample_cap) {
  std::map<std::string, std::vector<std::string>> groups;  // hex -> member ids
  std::string expect_name;
  for (const auto& [id, hash] : hashes) {
    if (expect_name.empty()) {
      expect_name = hash.name;
    } else if (hash.name != expect_name) {
      throw MixedAlgorithms("equivalence classes need a single algorithm, got " + expect_name +
                            " and " + hash.name);
    }
    groups[hash.to_hex()].push_back(id);
  }

  EquivalenceReport report;
  report.total = hashes.size();
  report.classes.reserve(groups.size());
  for (auto& [hex, ids] : groups) {
    std::sort(ids.begin(), ids.end());
    EquivalenceClass c;
    c.size = ids.size();
    c.sample_ids.assign(ids.begin(),
                        ids.begin() + static_cast<std::ptrdiff_t>(std::min(sample_cap, ids.size())));
    report.classes.push_back(std::move(c));
  }
  std::sort(report.classes.begin(), report.classes.end(),
            [](const EquivalenceClass& a, const EquivalenceClass& b) {
              if (a.size != b.size) return a.size > b.size;
              return a.sample_ids.front() < b.sample_ids.front();
            });
  return report;
}

namespace {

HistogramSeries histogram_from_acc(const LatticeAccumulator& acc) {
  if (acc.n() < 2) throw InsufficientSample("need at least 2 distances");
  const DistStats s = acc.stats();
  if (s.stdev == 0.0) {
    throw DegenerateSample("all distances sit on one lattice point");
  }

  HistogramSeries h;
  h.bits = acc.bits();
  h.mean = s.mean;
  h.stdev = s.stdev;
  h.n = acc.n();
  const int k_min = static_cast<int>(std::lround(s.min * acc.bits()));
  const int k_max = static_cast<int>(std::lround(s.max * acc.bits()));
  h.k_min = k_min;
  h.counts.assign(static_cast<std::size_t>(k_max - k_min + 1), 0);
  for (int k = k_min; k <= k_max; ++k) {
    h.counts[static_cast<std::size_t>(k - k_min)] = acc.counts()[static_cast<std::size_t>(k)];
  }
  h.npdf.resize(h.counts.size());
  const double denom = s.stdev * std::sqrt(2.0 * std::numbers::pi);
  for (std::size_t i = 0; i < h.npdf.size(); ++i) {
    const double x = h.centre(i);
    const double z = (x - s.mean) / s.stdev;
    h.npdf[i] = std::exp(-0.5 * z * z) / denom;
  }
  return h;
}

}  // namespace

HistogramSeries histogram_npdf(const LatticeAccumulator& acc) { return histogram_from_acc(acc); }

HistogramSeries histogram_npdf(std::span<const double> sample, int bits) {
  if (sample.size() < 2) throw InsufficientSample("need at least 2 distances");
  LatticeAccumulator acc(bits);
  for (double d : sample) {
    const int k = static_cast<int>(std::lround(d * bits));
    if (k < 0 || k > bits || std::abs(k - d * bits) > 1e-9) {
      throw Error("distance off the lattice: " + std::to_string(d));
    }
    acc.add_numer(k);
  }
  return histogram_from_acc(acc);
}

std::vector<RatePoint> threshold_rates(std::span<const double> inter,
                                       std::span<const double> intra,
                                       std::span<const double> thresholds) {
  if (inter.empty() || intra.empty()) throw EmptySample("both samples must be non-empty");
  std::vector<double> inter_sorted(inter.begin(), inter.end());
  std::vector<double> intra_sorted(intra.begin(), intra.end());
  std::sort(inter_sorted.begin(), inter_sorted.end());
  std::sort(intra_sorted.begin(), intra_sorted.end());

  std::vector<RatePoint> out;
  out.reserve(thresholds.size());
  for (double t : thresholds) {
    RatePoint p;
    p.threshold = t;
    const auto le = std::upper_bound(inter_sorted.begin(), inter_sorted.end(), t);
    p.fpr = static_cast<double>(le - inter_sorted.begin()) / static_cast<double>(inter_sorted.size());
    const auto gt = std::upper_bound(intra_sorted.begin(), intra_sorted.end(), t);
    p.fnr = static_cast<double>(intra_sorted.end() - gt) / static_cast<double>(intra_sorted.size());
    out.push_back(p);
  }
  return out;
}

std::vector<RatePoint> threshold_rates(const LatticeAccumulator& inter,
                                       const LatticeAccumulator& intra) {
  if (inter.n() == 0 || intra.n() == 0) throw EmptySample("both samples must be non-empty");
  if (inter.bits() != intra.bits()) throw LengthMismatch("lattices must match");
  const int bits = inter.bits();
  std::vector<RatePoint> out;
  out.reserve(static_cast<std::size_t>(bits + 1));
  std::uint64_t inter_cum = 0, intra_cum = 0;
  for (int k = 0; k <= bits; ++k) {
    inter_cum += inter.counts()[static_cast<std::size_t>(k)];
    intra_cum += intra.counts()[static_cast<std::size_t>(k)];
    RatePoint p;
    p.threshold = static_cast<double>(k) / bits;
    p.fpr = static_cast<double>(inter_cum) / static_cast<double>(inter.n());
    p.fnr = static_cast<double>(intra.n() - intra_cum) / static_cast<double>(intra.n());
    out.push_back(p);
  }
  return out;
}

}  // namespace pixhash
