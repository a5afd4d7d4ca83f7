#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "pixhash/hashes.hpp"

namespace pixhash {

/// Acceptance band per algorithm, in differing units against the reference
/// vectors: bits for the bit hashes, quantized categories for colourhash.
int golden_band(Algo algo);

struct GoldenViolation {
  std::string file;
  std::string algo;
  int differing = 0;  // bits, or categories for colourhash
  int band = 0;
  std::string expected_hex;
  std::string actual_hex;
};

struct GoldenOutcome {
  std::size_t checked = 0;
  std::vector<GoldenViolation> violations;
  bool ok() const { return !violations.empty() ? false : checked > 0; }
};

/// Hash every fixture named in the golden file and compare against the
/// recorded reference vectors under the per-algorithm bands.
/// Throws MissingGoldens when the golden file is absent.
GoldenOutcome check_goldens(const std::filesystem::path& fixtures_dir,
                            const std::filesystem::path& golden_file);

}  // namespace pixhash
