#include <thread>

#include "pixhash/harness.hpp"
#include "pixhash/hashes.hpp"

namespace pixhash {

namespace {

// Static contiguous partition: worker w gets [chunk*w, chunk*(w+1)).
// Results land in per-item slots, so the merge order never depends on
// scheduling.
void parallel_for_chunks(std::size_t count, int workers,
                         const std::function<void(std::size_t, std::size_t)>& body) {
  if (workers < 1) workers = 1;
  const auto w = static_cast<std::size_t>(workers);
  if (w <= 1 || count <= 1) {
    body(0, count);
    return;
  }
  const std::size_t chunk = (count + w - 1) / w;
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < w; ++t) {
    const std::size_t lo = std::min(count, t * chunk);
    const std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    threads.emplace_back(body, lo, hi);
  }
  for (auto& t : threads) t.join();
}

}  // namespace

BatchResult hash_corpus(const CorpusIndex& index, std::span<const Algo> algos,
                        std::string_view variant, const VariantFn& transform, HashStore& store,
                        int workers) {
  const std::size_t n = index.size();
  std::vector<std::vector<HashRecord>> slots(n);
  std::vector<std::string> errors(n);

  parallel_for_chunks(n, workers, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const CorpusEntry& entry = index.entries[i];
      // Skip work already present in the store (idempotent reruns).
      bool all_present = true;
      for (Algo algo : algos) {
        if (!store.find(entry.id, variant, algo_name(algo))) {
          all_present = false;
          break;
        }
      }
      if (all_present) continue;
      try {
        RasterImage img = read_image_file(entry.path);
        if (transform) img = transform(img);
        for (Algo algo : algos) {
          HashRecord rec;
          rec.image_id = entry.id;
          rec.variant = std::string(variant);
          rec.hash = hash_image(algo, img);
          slots[i].push_back(std::move(rec));
        }
      } catch (const std::exception& e) {
        slots[i].clear();
        errors[i] = e.what();
      }
    }
  });

  BatchResult result;
  for (std::size_t i = 0; i < n; ++i) {
    if (!errors[i].empty()) {
      result.failures.push_back({index.entries[i].id, errors[i]});
      continue;
    }
    for (auto& rec : slots[i]) {
      if (store.upsert(std::move(rec))) ++result.new_records;
    }
  }
  return result;
}

namespace {

// Hash pointers for every corpus image under (variant, algo), or MissingHashes.
std::vector<const BitHash*> resolve_all(const HashStore& store, const CorpusIndex& index,
                                        std::string_view variant, const std::string& algo) {
  std::vector<const BitHash*> out(index.size());
  for (std::size_t i = 0; i < index.size(); ++i) {
    const BitHash* h = store.find(index.entries[i].id, variant, algo);
    if (!h) {
      throw MissingHashes("no " + algo + " hash for image '" + index.entries[i].id +
                          "' variant '" + std::string(variant) + "'");
    }
    out[i] = h;
  }
  return out;
}

}  // namespace

std::vector<ExperimentResult> run_inter(const HashStore& store, const CorpusIndex& index,
                                        const RunManifest& manifest, std::string_view variant,
                                        std::span<const std::string> algos, int workers,
                                        const RecordSink& sink) {
  const auto pairs = sample_pairs(index, manifest.seed, manifest.k_neighbours);

  std::vector<ExperimentResult> results;
  for (const std::string& algo : algos) {
    const auto hashes = resolve_all(store, index, variant, algo);
    const int bits = hashes[0]->bit_length;

    ExperimentResult res;
    res.algo = algo;
    res.distances = LatticeAccumulator(bits);

    if (sink) {
      // Record emission is ordered, so drive it serially.
      for (const auto& [a, b] : pairs) {
        const Distance d = hamming_norm(*hashes[a], *hashes[b]);
        res.distances.add(d);
        ComparisonRecord rec;
        rec.id_a = index.entries[a].id;
        rec.id_b = index.entries[b].id;
        rec.algo = algo;
        rec.distance = d;
        sink(rec);
      }
    } else {
      const auto w = static_cast<std::size_t>(std::max(1, workers));
      std::vector<LatticeAccumulator> partial(w, LatticeAccumulator(bits));
      const std::size_t chunk = (pairs.size() + w - 1) / w;
      parallel_for_chunks(pairs.size(), static_cast<int>(w), [&](std::size_t lo, std::size_t hi) {
        LatticeAccumulator& acc = partial[lo / chunk];
        for (std::size_t p = lo; p < hi; ++p) {
          acc.add(hamming_norm(*hashes[pairs[p].first], *hashes[pairs[p].second]));
        }
      });
      for (const auto& acc : partial) res.distances.merge(acc);
    }
    results.push_back(std::move(res));
  }
  return results;
}

std::vector<ExperimentResult> run_intra(const HashStore& store, const CorpusIndex& index,
                                        std::string_view modification,
                                        std::span<const std::string> algos,
                                        const RecordSink& sink) {
  std::vector<ExperimentResult> results;
  for (const std::string& algo : algos) {
    const auto originals = resolve_all(store, index, kOriginalVariant, algo);
    const auto modified = resolve_all(store, index, modification, algo);

    ExperimentResult res;
    res.algo = algo;
    res.distances = LatticeAccumulator(originals[0]->bit_length);
    for (std::size_t i = 0; i < index.size(); ++i) {
      const Distance d = hamming_norm(*originals[i], *modified[i]);
      res.distances.add(d);
      if (sink) {
        ComparisonRecord rec;
        rec.id_a = index.entries[i].id;
        rec.id_b = index.entries[i].id;
        rec.algo = algo;
        rec.modification = std::string(modification);
        rec.distance = d;
        sink(rec);
      }
    }
    results.push_back(std::move(res));
  }
  return results;
}

}  // namespace pixhash
