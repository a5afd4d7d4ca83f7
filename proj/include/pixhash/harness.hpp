#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pixhash/bithash.hpp"
#include "pixhash/image.hpp"
#include "pixhash/metrics.hpp"

namespace pixhash {

inline constexpr const char* kOriginalVariant = "original";

struct CorpusEntry {
  std::string id;          // relative path with '/' separators
  std::filesystem::path path;
  std::string digest;      // sha256 of the file bytes
};

struct CorpusIndex {
  std::vector<CorpusEntry> entries;  // ordered lexicographically by id
  bool deduped = false;
  std::string corpus_digest;         // sha256 over the ordered entry digests

  std::size_t size() const { return entries.size(); }
};

/// Index every *.jpg/*.jpeg/*.png under root (recursive, case-insensitive
/// extensions). With dedup set, byte-identical files collapse onto the
/// lexicographically first id. Throws UnreadablePath / EmptyCorpus.
CorpusIndex ingest_corpus(const std::filesystem::path& root, bool dedup);

/// Everything that determines a run's sampled comparisons.
struct RunManifest {
  std::uint64_t seed = 20221207;
  int k_neighbours = 50;
  std::vector<std::string> algorithms;
  std::vector<std::string> modifications;
  std::string corpus_digest;
  std::map<std::string, std::string> parameter_overrides;
  std::map<std::string, bool> emulation_flags;
  std::string tool_version;

  std::string to_json() const;
  static RunManifest from_json(const std::string& text);

  void save(const std::filesystem::path& path) const;
  static RunManifest load(const std::filesystem::path& path);
};

/// For each image, k partner indices drawn uniformly without replacement from
/// the other images. The draw stream is keyed on (seed, image id), so corpus
/// order does not matter and other images' partner lists never shift.
std::vector<std::pair<std::uint32_t, std::uint32_t>> sample_pairs(const CorpusIndex& index,
                                                                  std::uint64_t seed, int k);

struct HashRecord {
  std::string image_id;
  std::string variant;  // "original" or a modification name
  BitHash hash;
};

/// Append-only hash record set keyed by (image_id, variant, algo).
class HashStore {
 public:
  /// False when the key already exists (records are immutable; a conflicting
  /// re-insert with different bits throws FormatError).
  bool upsert(HashRecord record);

  const BitHash* find(std::string_view image_id, std::string_view variant,
                      std::string_view algo) const;

  const std::vector<HashRecord>& records() const { return records_; }

  /// Distinct algo tags present for a variant.
  std::vector<std::string> algos_for_variant(std::string_view variant) const;

  /// Tab-separated lines: image_id, variant, algo, bitlen, hex.
  void save(const std::filesystem::path& path) const;
  static HashStore load(const std::filesystem::path& path);

 private:
  std::vector<HashRecord> records_;
  std::map<std::string, std::size_t> index_;
};

/// Hash records declared by an external tool (e.g. a learned model evaluated
/// elsewhere) join the store under their declared tag and bit length.
/// Throws FormatError / LengthInconsistency.
std::size_t import_external_hashes(const std::filesystem::path& file, HashStore& store);

using VariantFn = std::function<RasterImage(const RasterImage&)>;

struct BatchFailure {
  std::string image_id;
  std::string message;
};

struct BatchResult {
  std::size_t new_records = 0;
  std::vector<BatchFailure> failures;
};

/// Decode every corpus image, apply `transform` (identity for originals), and
/// hash with each algorithm, inserting into the store. Per-image failures are
/// recorded, not thrown. Deterministic for any worker count.
BatchResult hash_corpus(const CorpusIndex& index, std::span<const Algo> algos,
                        std::string_view variant, const VariantFn& transform, HashStore& store,
                        int workers = 1);

struct ExperimentResult {
  std::string algo;
  LatticeAccumulator distances;
};

using RecordSink = std::function<void(const ComparisonRecord&)>;

/// Inter-score experiment: distances over the manifest-sampled pairs within
/// one variant, per algorithm. Throws MissingHashes when a sampled image has
/// no record. Deterministic for any worker count.
std::vector<ExperimentResult> run_inter(const HashStore& store, const CorpusIndex& index,
                                        const RunManifest& manifest, std::string_view variant,
                                        std::span<const std::string> algos, int workers = 1,
                                        const RecordSink& sink = nullptr);

/// Intra-score experiment: one original-vs-modified distance per image per
/// algorithm.
std::vector<ExperimentResult> run_intra(const HashStore& store, const CorpusIndex& index,
                                        std::string_view modification,
                                        std::span<const std::string> algos,
                                        const RecordSink& sink = nullptr);

}  // namespace pixhash
