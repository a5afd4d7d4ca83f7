#include <algorithm>
#include <cctype>
#include <set>

#include "pixhash/digest.hpp"
#include "pixhash/harness.hpp"

namespace pixhash {

namespace {

bool has_image_extension(const std::filesystem::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".jpg" || ext == ".jpeg" || ext == ".png";
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t bounded_draw(std::uint64_t& state, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t r;
  do {
    r = splitmix64(state);
  } while (r >= limit);
  return r % n;
}

}  // namespace

CorpusIndex ingest_corpus(const std::filesystem::path& root, bool dedup) {
  std::error_code ec;
  if (!std::filesystem::is_directory(root, ec)) {
    throw UnreadablePath("corpus root is not a readable directory: " + root.string());
  }

  CorpusIndex index;
  index.deduped = dedup;
  for (auto it = std::filesystem::recursive_directory_iterator(root, ec);
       it != std::filesystem::recursive_directory_iterator(); it.increment(ec)) {
    if (ec) throw UnreadablePath("cannot walk " + root.string() + ": " + ec.message());
    if (!it->is_regular_file() || !has_image_extension(it->path())) continue;
    CorpusEntry entry;
    entry.path = it->path();
    entry.id = std::filesystem::relative(it->path(), root).generic_string();
    entry.digest = sha256_hex(read_file(it->path()));
    index.entries.push_back(std::move(entry));
  }

  std::sort(index.entries.begin(), index.entries.end(),
            [](const CorpusEntry& a, const CorpusEntry& b) { return a.id < b.id; });

  if (dedup) {
    std::set<std::string> seen;
    std::vector<CorpusEntry> kept;
    kept.reserve(index.entries.size());
    for (auto& e : index.entries) {
      if (seen.insert(e.digest).second) kept.push_back(std::move(e));
    }
    index.entries = std::move(kept);
  }

  if (index.entries.size() < 2) {
    throw EmptyCorpus("corpus needs at least 2 images, found " +
                      std::to_string(index.entries.size()));
  }

  std::string digest_cat;
  for (const auto& e : index.entries) digest_cat += e.digest;
  index.corpus_digest = sha256_hex(
      std::span(reinterpret_cast<const std::uint8_t*>(digest_cat.data()), digest_cat.size()));
  return index;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> sample_pairs(const CorpusIndex& index,
                                                                  std::uint64_t seed, int k) {
  const std::size_t n = index.size();
  if (n < static_cast<std::size_t>(k) + 1) {
    throw CorpusTooSmall("need at least k+1 = " + std::to_string(k + 1) + " images, have " +
                         std::to_string(n));
  }

  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  pairs.reserve(n * static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t state = seed ^ fnv1a64(index.entries[i].id);
    std::vector<std::uint32_t> partners;
    partners.reserve(static_cast<std::size_t>(k));
    while (partners.size() < static_cast<std::size_t>(k)) {
      const auto j = static_cast<std::uint32_t>(bounded_draw(state, n));
      if (j == i) continue;
      if (std::find(partners.begin(), partners.end(), j) != partners.end()) continue;
      partners.push_back(j);
    }
    for (std::uint32_t j : partners) {
      pairs.emplace_back(static_cast<std::uint32_t>(i), j);
    }
  }
  return pairs;
}

}  // namespace pixhash
