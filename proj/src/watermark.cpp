#include <cstring>
#include <map>

#include "pixhash/digest.hpp"
#include "pixhash/mods.hpp"

namespace pixhash {

namespace {

// 5x7 bitmap glyphs, one byte per row, low 5 bits used.
struct Glyph {
  char c;
  std::uint8_t rows[7];
};

constexpr Glyph kGlyphs[] = {
    {'A', {0x0E, 0x11, 0x11, 0x1F, 0x11, 0x11, 0x11}},
    {'E', {0x1F, 0x10, 0x10, 0x1E, 0x10, 0x10, 0x1F}},
    {'K', {0x11, 0x12, 0x14, 0x18, 0x14, 0x12, 0x11}},
    {'L', {0x10, 0x10, 0x10, 0x10, 0x10, 0x10, 0x1F}},
    {'M', {0x11, 0x1B, 0x15, 0x15, 0x11, 0x11, 0x11}},
    {'P', {0x1E, 0x11, 0x11, 0x1E, 0x10, 0x10, 0x10}},
    {'R', {0x1E, 0x11, 0x11, 0x1E, 0x14, 0x12, 0x11}},
    {'S', {0x0F, 0x10, 0x10, 0x0E, 0x01, 0x01, 0x1E}},
    {'X', {0x11, 0x11, 0x0A, 0x04, 0x0A, 0x11, 0x11}},
    {'-', {0x00, 0x00, 0x00, 0x0E, 0x00, 0x00, 0x00}},
    {'.', {0x00, 0x00, 0x00, 0x00, 0x00, 0x0C, 0x0C}},
    {' ', {0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00}},
};

const std::uint8_t* glyph_rows(char c) {
  for (const Glyph& g : kGlyphs) {
    if (g.c == c) return g.rows;
  }
  return glyph_rows(' ');
}

void fill_rect(RasterImage& img, int x0, int y0, int w, int h, std::uint8_t r, std::uint8_t g,
               std::uint8_t b) {
  for (int y = y0; y < y0 + h; ++y) {
    for (int x = x0; x < x0 + w; ++x) {
      std::uint8_t* p = img.at(x, y);
      p[0] = r;
      p[1] = g;
      p[2] = b;
    }
  }
}

void draw_text(RasterImage& img, int x0, int y0, int scale, const char* text, std::uint8_t r,
               std::uint8_t g, std::uint8_t b) {
  int x = x0;
  for (const char* c = text; *c; ++c) {
    const std::uint8_t* rows = glyph_rows(*c);
    for (int gy = 0; gy < 7; ++gy) {
      for (int gx = 0; gx < 5; ++gx) {
        if ((rows[gy] >> (4 - gx)) & 1) {
          fill_rect(img, x + gx * scale, y0 + gy * scale, scale, scale, r, g, b);
        }
      }
    }
    x += 6 * scale;  // 5px glyph + 1px gap
  }
}

RasterImage build_asset() {
  RasterImage stamp(240, 60);
  fill_rect(stamp, 0, 0, 240, 60, 244, 244, 238);

  // Logo: dark ring with an orange disc and a white wedge pointing right.
  const int cx = 30, cy = 30;
  for (int y = 0; y < 60; ++y) {
    for (int x = 4; x < 56; ++x) {
      const int dx = x - cx, dy = y - cy;
      const int d2 = dx * dx + dy * dy;
      if (d2 <= 24 * 24) {
        std::uint8_t* p = stamp.at(x, y);
        if (d2 > 21 * 21) {
          p[0] = 40, p[1] = 44, p[2] = 52;
        } else if (dx > 2 && std::abs(dy) < (dx - 2) / 2 + 4) {
          p[0] = 250, p[1] = 250, p[2] = 250;
        } else {
          p[0] = 232, p[1] = 118, p[2] = 32;
        }
      }
    }
  }

  draw_text(stamp, 64, 10, 2, "SAMPLE MARK", 40, 44, 52);
  draw_text(stamp, 64, 38, 1, "SAMPLE-MARK.EXAMPLE", 110, 110, 116);
  return stamp;
}

}  // namespace

const RasterImage& watermark_asset() {
  static const RasterImage asset = build_asset();
  return asset;
}

const std::string& watermark_asset_digest() {
  static const std::string digest = sha256_hex(watermark_asset().pixels);
  return digest;
}

}  // namespace pixhash
