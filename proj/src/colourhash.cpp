#include <array>
#include <cmath>

#include "pixhash/hashes.hpp"

namespace pixhash {

namespace {

// Frozen classification thresholds, byte-scaled: a pixel is black when
// V < 32, gray when saturation < 86, and chromatic otherwise, with the
// low/high saturation split at 171.
constexpr int kBlackV = 32;
constexpr int kGraySat = 86;
constexpr int kHighSat = 171;
constexpr int kHueBins = 6;
constexpr int kCategories = 14;  // black, gray, 6 hue bins x 2 sat bands

// Byte-quantized hue, integer arithmetic throughout (colorsys scaled to 255).
int hue_byte(int r, int g, int b, int v, int mn) {
  const int cr = v - mn;
  const int rc = 255 * (v - r) / cr;
  const int gc = 255 * (v - g) / cr;
  const int bc = 255 * (v - b) / cr;
  int h;
  if (v == r) {
    h = bc - gc;
  } else if (v == g) {
    h = 2 * 255 + rc - bc;
  } else {
    h = 4 * 255 + gc - rc;
  }
  h /= 6;
  if (h < 0) h += 255;
  return h & 255;
}

// Six equal bins over the hue byte (boundaries at multiples of 255/6).
int hue_bin(int h) {
  if (h <= 42) return 0;
  if (h < 85) return 1;
  if (h < 128) return 2;
  if (h < 170) return 3;
  if (h < 213) return 4;
  return 5;
}

}  // namespace

std::vector<int> colourhash_categories(const RasterImage& img) {
  std::uint64_t black = 0, gray = 0, chromatic = 0;
  std::array<std::uint64_t, kHueBins> high{};
  std::array<std::uint64_t, kHueBins> low{};

  const std::uint8_t* p = img.pixels.data();
  const std::uint64_t total = static_cast<std::uint64_t>(img.width) * img.height;
  for (std::uint64_t i = 0; i < total; ++i, p += 3) {
    const int r = p[0], g = p[1], b = p[2];
    const int v = std::max({r, g, b});
    if (v < kBlackV) {
      ++black;
      continue;
    }
    const int mn = std::min({r, g, b});
    const int sat = (v == 0) ? 0 : 255 * (v - mn) / v;
    if (sat < kGraySat) {
      ++gray;
      continue;
    }
    ++chromatic;
    const int bin = hue_bin(hue_byte(r, g, b, v, mn));
    if (sat < kHighSat) {
      ++low[static_cast<std::size_t>(bin)];
    } else {
      ++high[static_cast<std::size_t>(bin)];
    }
  }

  // Black and gray fractions are relative to all pixels; hue-bin fractions
  // are relative to the chromatic pixel count, mirroring the reference scheme.
  const std::uint64_t c = std::max<std::uint64_t>(1, chromatic);
  auto code = [](std::uint64_t count, std::uint64_t denom) {
    return static_cast<int>(std::min<std::uint64_t>(7, count * 8 / denom));
  };

  std::vector<int> cats;
  cats.reserve(kCategories);
  cats.push_back(code(black, total));
  cats.push_back(code(gray, total));
  for (int i = 0; i < kHueBins; ++i) cats.push_back(code(high[static_cast<std::size_t>(i)], c));
  for (int i = 0; i < kHueBins; ++i) cats.push_back(code(low[static_cast<std::size_t>(i)], c));
  return cats;
}

BitHash colourhash(const RasterImage& img) {
  const auto cats = colourhash_categories(img);
  // 14 categories x 3 bits = 42 payload bits, zero-padded to the declared 44.
  BitHash hash(Algo::colourhash, 44);
  for (int i = 0; i < kCategories; ++i) {
    const int v = cats[static_cast<std::size_t>(i)];
    for (int b = 0; b < 3; ++b) {
      if ((v >> (2 - b)) & 1) hash.set_bit(i * 3 + b);
    }
  }
  return hash;
}

std::vector<int> colourhash_categories(const BitHash& hash) {
  if (hash.algo != Algo::colourhash || hash.bit_length != 44) {
    throw AlgorithmMismatch("category decoding requires a 44-bit colourhash");
  }
  std::vector<int> cats(kCategories, 0);
  for (int i = 0; i < kCategories; ++i) {
    for (int b = 0; b < 3; ++b) {
      cats[static_cast<std::size_t>(i)] |= hash.bit(i * 3 + b) << (2 - b);
    }
  }
  return cats;
}

}  // namespace pixhash
