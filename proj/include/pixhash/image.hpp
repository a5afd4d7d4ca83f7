#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "pixhash/errors.hpp"

namespace pixhash {

/// Decoded 8-bit RGB raster, row-major. Alpha from the source, if any, has
/// already been composited over black; 16-bit sources are truncated to 8.
struct RasterImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // width*height*3, RGB interleaved

  RasterImage() = default;
  RasterImage(int w, int h, std::uint8_t fill = 0)
      : width(w), height(h), pixels(static_cast<std::size_t>(w) * h * 3, fill) {}

  std::size_t index(int x, int y) const {
    return (static_cast<std::size_t>(y) * width + x) * 3;
  }
  std::uint8_t* at(int x, int y) { return pixels.data() + index(x, y); }
  const std::uint8_t* at(int x, int y) const { return pixels.data() + index(x, y); }

  bool operator==(const RasterImage&) const = default;
};

/// Real-valued luma plane in [0,255], row-major. Kept unquantized so the
/// frequency transforms see exact inputs.
struct GrayBuffer {
  int width = 0;
  int height = 0;
  std::vector<double> values;  // width*height

  GrayBuffer() = default;
  GrayBuffer(int w, int h, double fill = 0.0)
      : width(w), height(h), values(static_cast<std::size_t>(w) * h, fill) {}

  double& at(int x, int y) { return values[static_cast<std::size_t>(y) * width + x]; }
  double at(int x, int y) const { return values[static_cast<std::size_t>(y) * width + x]; }
};

enum class Kernel { nearest, bilinear, box_area, bicubic };

const char* kernel_name(Kernel k);
Kernel kernel_from_name(const std::string& name);  // throws UnknownAlgorithm on bad name

/// Decode a JPEG or PNG byte stream.
/// Throws UnsupportedFormat for other containers, MalformedStream on decode errors.
RasterImage decode_image(std::span<const std::uint8_t> bytes);

/// Baseline JPEG encode. quality in [1,100] scales the default quantization
/// tables (libjpeg convention). 4:4:4 at quality >= 95, 4:2:0 below.
std::vector<std::uint8_t> encode_jpeg(const RasterImage& img, int quality);

/// Lossless 8-bit RGB PNG encode.
std::vector<std::uint8_t> encode_png(const RasterImage& img);

/// Rec.601 luma: 0.299 R + 0.587 G + 0.114 B, real-valued.
GrayBuffer to_luma(const RasterImage& img);

RasterImage resize(const RasterImage& img, int new_w, int new_h, Kernel kernel);
GrayBuffer resize(const GrayBuffer& img, int new_w, int new_h, Kernel kernel);

/// Shrink so the longer edge equals `box`, preserving aspect ratio (floor
/// rounding, minimum 1). Images already inside the box are returned unchanged.
RasterImage fit_within(const RasterImage& img, int box, Kernel kernel = Kernel::bicubic);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);
RasterImage read_image_file(const std::filesystem::path& path);

}  // namespace pixhash
