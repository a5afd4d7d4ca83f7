#pragma once

#include "pixhash/bithash.hpp"
#include "pixhash/image.hpp"

namespace pixhash {

/// PDQ hash plus its gradient-based quality score.
struct PdqResult {
  BitHash hash;
  int quality = 0;  // 0..100
};

/// 64-bit DCT hash: luma -> 32x32 box resize -> 2-D DCT -> low 8x8 block
/// (DC included) -> median threshold, bits row-major.
BitHash phash64(const RasterImage& img);

/// 64-bit Haar-wavelet hash. Luma scaled to [0,1], box-resized to
/// S = min(64, max(8, 2^floor(log2(min(w,h))))), global luminance removed by
/// zeroing the top Haar approximation coefficient, then the 8x8 approximation
/// band is median-thresholded.
BitHash wavehash64(const RasterImage& img);

/// 256-bit block-mean hash over a 16x16 grid of R+G+B block sums with
/// fractional-pixel apportioning; bits thresholded per 4-row band median.
BitHash blockhash256(const RasterImage& img);

/// 44-bit colour-distribution hash: 14 pixel categories (black, gray, 6 hue
/// bins x 2 saturation bands), each category's frequency floor-quantized to
/// 3 bits, zero-padded from 42 to 44 bits.
BitHash colourhash(const RasterImage& img);

/// PDQ: two-pass Jarosz box downsample to 64x64, 16x16 DCT slice (frequency
/// indices 1..16, DC excluded), median threshold. Quality is the clamped
/// gradient-energy score of the 64x64 plane.
PdqResult pdq256(const RasterImage& img);

/// Uniform dispatch over the implemented set. Throws UnknownAlgorithm for
/// Algo::external.
BitHash hash_image(Algo algo, const RasterImage& img);

/// Quantized category codes behind colourhash, exposed for band comparisons:
/// 14 values in [0,7], order black, gray, high-sat hue bins 0..5, low-sat
/// hue bins 0..5.
std::vector<int> colourhash_categories(const RasterImage& img);

/// Category codes recovered from an encoded colourhash.
std::vector<int> colourhash_categories(const BitHash& hash);

}  // namespace pixhash
