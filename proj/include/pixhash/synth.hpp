#pragma once

#include <cstdint>
#include <filesystem>

#include "pixhash/image.hpp"

namespace pixhash {

/// Procedural photograph-like test image. Fully determined by (seed, index);
/// the long edge is `long_edge` pixels with a randomised aspect ratio.
RasterImage synth_photo(std::uint64_t seed, std::uint32_t index, int long_edge = 500);

/// Write `count` synthetic photos into `dir` as img#####.jpg. Deterministic
/// for any worker count.
void generate_corpus(const std::filesystem::path& dir, std::uint64_t seed, int count,
                     int jpeg_quality = 93, int workers = 1, int long_edge = 500);

}  // namespace pixhash
