#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pixhash/image.hpp"

namespace pixhash {

enum class ModKind { border, compression, crop, mirror, scale, thumb96, watermark };

constexpr int kModKindCount = 7;

const char* mod_name(ModKind kind);
ModKind mod_from_name(const std::string& name);  // throws UnknownAlgorithm
std::vector<ModKind> all_mods();

enum class MirrorAxis { horizontal, vertical };

/// One content-preserving attack with its frozen parameterization. Defaults
/// are the reference constants; anything overridden must be recorded in the
/// run manifest by the caller.
struct ModificationSpec {
  ModKind kind = ModKind::border;

  int border_px = 30;
  int jpeg_quality = 30;
  double crop_frac = 0.05;  // removed per side
  MirrorAxis mirror_axis = MirrorAxis::horizontal;
  double scale_factor = 1.5;
  Kernel scale_kernel = Kernel::bicubic;
  int thumb_box = 96;
  int thumb_jpeg_quality = 90;
  double watermark_height_frac = 0.10;
  int watermark_min_px = 40;

  static ModificationSpec of(ModKind kind) {
    ModificationSpec spec;
    spec.kind = kind;
    return spec;
  }
};

RasterImage apply_border(const RasterImage& img, int border_px = 30);
RasterImage apply_compression(const RasterImage& img, int quality = 30);
RasterImage apply_crop(const RasterImage& img, double frac = 0.05);
RasterImage apply_mirror(const RasterImage& img, MirrorAxis axis = MirrorAxis::horizontal);
RasterImage apply_scale(const RasterImage& img, double factor = 1.5,
                        Kernel kernel = Kernel::bicubic);
RasterImage apply_thumb96(const RasterImage& img, int box = 96, Kernel kernel = Kernel::bicubic,
                          int jpeg_quality = 90);
RasterImage apply_watermark(const RasterImage& img, double height_frac = 0.10, int min_px = 40);

RasterImage apply(const ModificationSpec& spec, const RasterImage& img);

/// The deterministic watermark stamp (logo, caption, URL line) at its base
/// resolution. Identical pixels on every run.
const RasterImage& watermark_asset();

/// SHA-256 of the stamp's pixel bytes, for content-addressing in manifests.
const std::string& watermark_asset_digest();

/// The thumbnail attack emulates a real thumbnail cache; runs must flag it.
constexpr bool kThumb96Emulated = true;

}  // namespace pixhash
