#include <fstream>
#include <map>
#include <sstream>

#include "pixhash/golden.hpp"
#include "pixhash/metrics.hpp"

namespace pixhash {

int golden_band(Algo algo) {
  switch (algo) {
    case Algo::phash: return 6;      // of 64 bits
    case Algo::wavehash: return 6;   // of 64 bits
    case Algo::pdq: return 10;       // of 256 bits
    case Algo::blockhash: return 16; // of 256 bits
    case Algo::colourhash: return 2; // quantized categories
    case Algo::external: break;
  }
  throw UnknownAlgorithm("no golden band for external hashes");
}

GoldenOutcome check_goldens(const std::filesystem::path& fixtures_dir,
                            const std::filesystem::path& golden_file) {
  std::ifstream in(golden_file);
  if (!in) throw MissingGoldens("golden vector file not found: " + golden_file.string());

  GoldenOutcome outcome;
  std::map<std::string, RasterImage> cache;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::istringstream ss(line);
    std::string field;
    while (std::getline(ss, field, '\t')) f.push_back(field);
    if (f.size() != 4) {
      throw FormatError(golden_file.string() + ":" + std::to_string(lineno) +
                        ": expected file, algo, bitlen, hex");
    }
    const Algo algo = algo_from_name(f[1]);
    const int bits = std::stoi(f[2]);
    if (bits != declared_bits(algo)) {
      throw FormatError(golden_file.string() + ":" + std::to_string(lineno) +
                        ": wrong bit length for " + f[1]);
    }
    const BitHash expected = BitHash::from_hex(algo, f[1], bits, f[3]);

    auto it = cache.find(f[0]);
    if (it == cache.end()) {
      it = cache.emplace(f[0], read_image_file(fixtures_dir / f[0])).first;
    }
    const BitHash actual = hash_image(algo, it->second);

    int differing;
    if (algo == Algo::colourhash) {
      const auto a = colourhash_categories(actual);
      const auto b = colourhash_categories(expected);
      differing = 0;
      for (std::size_t i = 0; i < a.size(); ++i) differing += (a[i] != b[i]);
    } else {
      differing = hamming_norm(actual, expected).numer;
    }

    ++outcome.checked;
    const int band = golden_band(algo);
    if (differing > band) {
      outcome.violations.push_back(
          {f[0], f[1], differing, band, expected.to_hex(), actual.to_hex()});
    }
  }
  if (outcome.checked == 0) {
    throw MissingGoldens("golden vector file has no entries: " + golden_file.string());
  }
  return outcome;
}

}  // namespace pixhash
