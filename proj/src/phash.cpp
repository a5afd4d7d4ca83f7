#include "pixhash/hashes.hpp"
#include "pixhash/transforms.hpp"
#include "stat_util.hpp"

namespace pixhash {

BitHash phash64(const RasterImage& img) {
  const GrayBuffer small = resize(to_luma(img), 32, 32, Kernel::box_area);

  static const DctPlan plan(32);
  Mat m(32);
  m.v = small.values;
  const Mat coeffs = plan.dct2(m);

  std::vector<double> block(64);
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      block[static_cast<std::size_t>(r) * 8 + c] = coeffs.at(r, c);
    }
  }
  const double med = median_of(block);

  BitHash hash(Algo::phash, 64);
  for (int i = 0; i < 64; ++i) {
    if (block[static_cast<std::size_t>(i)] > med) hash.set_bit(i);
  }
  return hash;
}

BitHash wavehash64(const RasterImage& img) {
  GrayBuffer luma = to_luma(img);
  for (auto& v : luma.values) v /= 255.0;

  const int min_dim = std::min(img.width, img.height);
  int s = 8;
  while (s * 2 <= min_dim && s < 64) s *= 2;
  GrayBuffer small = resize(luma, s, s, Kernel::box_area);

  // Zeroing the top-level Haar approximation coefficient and reconstructing
  // is exactly a subtraction of the plane mean.
  double mean = 0.0;
  for (double v : small.values) mean += v;
  mean /= static_cast<double>(small.values.size());
  for (auto& v : small.values) v -= mean;

  Mat m(s);
  m.v = small.values;
  const int levels = log2_exact(s) - 3;  // approximation band at 8x8
  const Mat coeffs = haar_forward(m, levels);

  std::vector<double> band(64);
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      band[static_cast<std::size_t>(r) * 8 + c] = coeffs.at(r, c);
    }
  }
  const double med = median_of(band);

  BitHash hash(Algo::wavehash, 64);
  for (int i = 0; i < 64; ++i) {
    if (band[static_cast<std::size_t>(i)] > med) hash.set_bit(i);
  }
  return hash;
}

}  // namespace pixhash
