#include <array>

#include "pixhash/hashes.hpp"
#include "stat_util.hpp"

namespace pixhash {

namespace {

constexpr int kGrid = 16;

// Per-axis overlap of one pixel cell with each grid block, in 1/16-pixel
// units so everything stays in exact integer arithmetic: cell i covers
// [16i, 16i+16), block b covers [b*dim, (b+1)*dim). Exact ties matter here —
// on a constant image every block must sum to the identical value.
struct CellSplit {
  int first_block = 0;
  std::vector<int> num;  // overlap numerators for consecutive blocks
};

std::vector<CellSplit> split_axis(int dim) {
  std::vector<CellSplit> out(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    CellSplit& s = out[static_cast<std::size_t>(i)];
    const long lo = 16L * i;
    const long hi = lo + 16;
    int b = static_cast<int>(lo / dim);
    s.first_block = b;
    while (b < kGrid && static_cast<long>(b) * dim < hi) {
      const long blo = static_cast<long>(b) * dim;
      const long bhi = blo + dim;
      const long overlap = std::min(hi, bhi) - std::max(lo, blo);
      s.num.push_back(static_cast<int>(overlap));
      ++b;
    }
  }
  return out;
}

}  // namespace

BitHash blockhash256(const RasterImage& img) {
  // Sums of value * wx * wy are integers well below 2^53, so doubles hold
  // them exactly and comparisons against the band median are exact.
  std::array<double, kGrid * kGrid> blocks{};
  const auto xs = split_axis(img.width);
  const auto ys = split_axis(img.height);

  const std::uint8_t* p = img.pixels.data();
  for (int y = 0; y < img.height; ++y) {
    const CellSplit& sy = ys[static_cast<std::size_t>(y)];
    for (int x = 0; x < img.width; ++x, p += 3) {
      const CellSplit& sx = xs[static_cast<std::size_t>(x)];
      const int value = static_cast<int>(p[0]) + p[1] + p[2];
      for (std::size_t by = 0; by < sy.num.size(); ++by) {
        const double vy = static_cast<double>(value) * sy.num[by];
        double* row = blocks.data() + (sy.first_block + static_cast<int>(by)) * kGrid;
        for (std::size_t bx = 0; bx < sx.num.size(); ++bx) {
          row[sx.first_block + static_cast<int>(bx)] += vy * sx.num[bx];
        }
      }
    }
  }

  // Four horizontal bands of 64 blocks, thresholded at the band median.
  BitHash hash(Algo::blockhash, 256);
  for (int band = 0; band < 4; ++band) {
    std::vector<double> vals(blocks.begin() + band * 64, blocks.begin() + (band + 1) * 64);
    const double med = median_of(vals);
    for (int j = 0; j < 64; ++j) {
      if (blocks[static_cast<std::size_t>(band) * 64 + j] > med) {
        hash.set_bit(band * 64 + j);
      }
    }
  }
  return hash;
}

}  // namespace pixhash
