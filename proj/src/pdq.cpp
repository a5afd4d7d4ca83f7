#include <cassert>
#include <cmath>
#include <numbers>

#include "pixhash/hashes.hpp"
#include "stat_util.hpp"

namespace pixhash {

namespace {

constexpr int kOut = 64;        // downsample target per axis
constexpr int kDctSize = 16;    // hash grid
constexpr int kBoxPasses = 2;   // two box passes approximate a tent filter

int jarosz_window_size(int old_dim, int new_dim) {
  return (old_dim + 2 * new_dim - 1) / (2 * new_dim);
}

// Sliding box mean with window shrinkage at both ends, so every output is the
// mean of the in-range taps of a centred window.
void box_1d(const float* in, float* out, int len, int stride, int window) {
  const int half = (window + 2) / 2;
  const int phase1 = half - 1;
  const int phase2 = window - half + 1;
  const int phase3 = len - window;
  const int phase4 = half - 1;
  assert(phase3 >= 0);

  int li = 0, ri = 0, oi = 0;
  float sum = 0.0f;
  int n = 0;

  for (int i = 0; i < phase1; ++i) {
    sum += in[ri];
    ++n;
    ri += stride;
  }
  for (int i = 0; i < phase2; ++i) {
    sum += in[ri];
    ++n;
    out[oi] = sum / static_cast<float>(n);
    ri += stride;
    oi += stride;
  }
  for (int i = 0; i < phase3; ++i) {
    sum += in[ri];
    sum -= in[li];
    out[oi] = sum / static_cast<float>(n);
    ri += stride;
    li += stride;
    oi += stride;
  }
  for (int i = 0; i < phase4; ++i) {
    sum -= in[li];
    --n;
    out[oi] = sum / static_cast<float>(n);
    li += stride;
    oi += stride;
  }
}

void box_along_rows(const float* in, float* out, int rows, int cols, int window) {
  for (int r = 0; r < rows; ++r) {
    box_1d(in + static_cast<std::size_t>(r) * cols, out + static_cast<std::size_t>(r) * cols,
           cols, 1, window);
  }
}

void box_along_cols(const float* in, float* out, int rows, int cols, int window) {
  for (int c = 0; c < cols; ++c) {
    box_1d(in + c, out + c, rows, cols, window);
  }
}

// Point-decimate at target-cell centres.
void decimate(const float* in, int rows, int cols, float out[kOut][kOut]) {
  for (int i = 0; i < kOut; ++i) {
    const int ini = static_cast<int>(((i + 0.5f) * rows) / kOut);
    for (int j = 0; j < kOut; ++j) {
      const int inj = static_cast<int>(((j + 0.5f) * cols) / kOut);
      out[i][j] = in[static_cast<std::size_t>(ini) * cols + inj];
    }
  }
}

// Gradient-energy score of the 64x64 plane, clamped to [0,100]. Flat images
// score 0.
int quality_metric(const float img[kOut][kOut]) {
  int gradient_sum = 0;
  for (int i = 0; i < kOut - 1; ++i) {
    for (int j = 0; j < kOut; ++j) {
      const int d = static_cast<int>(((img[i][j] - img[i + 1][j]) * 100.0f) / 255.0f);
      gradient_sum += std::abs(d);
    }
  }
  for (int i = 0; i < kOut; ++i) {
    for (int j = 0; j < kOut - 1; ++j) {
      const int d = static_cast<int>(((img[i][j] - img[i][j + 1]) * 100.0f) / 255.0f);
      gradient_sum += std::abs(d);
    }
  }
  int quality = gradient_sum / 90;
  if (quality > 100) quality = 100;
  return quality;
}

// 16x64 DCT basis with frequency indices 1..16 — the DC row is excluded by
// construction.
const float* dct_basis() {
  static const auto table = [] {
    std::array<float, kDctSize * kOut> t{};
    const float scale = std::sqrt(2.0f / kOut);
    for (int i = 0; i < kDctSize; ++i) {
      for (int j = 0; j < kOut; ++j) {
        t[static_cast<std::size_t>(i) * kOut + j] = scale *
            static_cast<float>(
                std::cos((std::numbers::pi / 2.0 / kOut) * (i + 1) * (2 * j + 1)));
      }
    }
    return t;
  }();
  return table.data();
}

void dct_64_to_16(const float in[kOut][kOut], float out[kDctSize][kDctSize]) {
  const float* d = dct_basis();
  float tmp[kDctSize][kOut];
  for (int i = 0; i < kDctSize; ++i) {
    for (int j = 0; j < kOut; ++j) {
      float acc = 0.0f;
      for (int k = 0; k < kOut; ++k) {
        acc += d[static_cast<std::size_t>(i) * kOut + k] * in[k][j];
      }
      tmp[i][j] = acc;
    }
  }
  for (int i = 0; i < kDctSize; ++i) {
    for (int j = 0; j < kDctSize; ++j) {
      float acc = 0.0f;
      for (int k = 0; k < kOut; ++k) {
        acc += tmp[i][k] * d[static_cast<std::size_t>(j) * kOut + k];
      }
      out[i][j] = acc;
    }
  }
}

}  // namespace

PdqResult pdq256(const RasterImage& img) {
  const int rows = img.height;
  const int cols = img.width;
  const std::size_t n = static_cast<std::size_t>(rows) * cols;

  std::vector<float> buf1(n);
  const std::uint8_t* p = img.pixels.data();
  for (std::size_t i = 0; i < n; ++i, p += 3) {
    buf1[i] = 0.299f * p[0] + 0.587f * p[1] + 0.114f * p[2];
  }

  float down[kOut][kOut];

  if (rows == kOut && cols == kOut) {
    for (int i = 0; i < kOut; ++i) {
      for (int j = 0; j < kOut; ++j) {
        down[i][j] = buf1[static_cast<std::size_t>(i) * kOut + j];
      }
    }
  } else {
    std::vector<float> buf2(n);
    const int window_rows = jarosz_window_size(cols, kOut);
    const int window_cols = jarosz_window_size(rows, kOut);
    for (int pass = 0; pass < kBoxPasses; ++pass) {
      box_along_rows(buf1.data(), buf2.data(), rows, cols, window_rows);
      box_along_cols(buf2.data(), buf1.data(), rows, cols, window_cols);
    }
    decimate(buf1.data(), rows, cols, down);
  }

  PdqResult result;
  result.quality = quality_metric(down);

  float coeffs[kDctSize][kDctSize];
  dct_64_to_16(down, coeffs);

  std::vector<double> flat(kDctSize * kDctSize);
  for (int i = 0; i < kDctSize; ++i) {
    for (int j = 0; j < kDctSize; ++j) {
      flat[static_cast<std::size_t>(i) * kDctSize + j] = coeffs[i][j];
    }
  }
  const double med = median_of(flat);

  result.hash = BitHash(Algo::pdq, 256);
  for (int i = 0; i < 256; ++i) {
    if (flat[static_cast<std::size_t>(i)] > med) result.hash.set_bit(i);
  }
  return result;
}

}  // namespace pixhash
