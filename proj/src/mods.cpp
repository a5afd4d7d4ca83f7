#include <cmath>
#include <cstring>

#include "pixhash/mods.hpp"

namespace pixhash {

const char* mod_name(ModKind kind) {
  switch (kind) {
    case ModKind::border: return "border";
    case ModKind::compression: return "compression";
    case ModKind::crop: return "crop";
    case ModKind::mirror: return "mirror";
    case ModKind::scale: return "scale";
    case ModKind::thumb96: return "thumb96";
    case ModKind::watermark: return "watermark";
  }
  return "?";
}

ModKind mod_from_name(const std::string& name) {
  for (ModKind k : all_mods()) {
    if (name == mod_name(k)) return k;
  }
  throw UnknownAlgorithm("unknown modification '" + name +
                         "'; supported: border, compression, crop, mirror, scale, thumb96, "
                         "watermark");
}

std::vector<ModKind> all_mods() {
  return {ModKind::border,  ModKind::compression, ModKind::crop,     ModKind::mirror,
          ModKind::scale,   ModKind::thumb96,     ModKind::watermark};
}

RasterImage apply_border(const RasterImage& img, int border_px) {
  RasterImage out(img.width + 2 * border_px, img.height + 2 * border_px, 0);
  for (int y = 0; y < img.height; ++y) {
    std::memcpy(out.at(border_px, border_px + y), img.at(0, y),
                static_cast<std::size_t>(img.width) * 3);
  }
  return out;
}

RasterImage apply_compression(const RasterImage& img, int quality) {
  return decode_image(encode_jpeg(img, quality));
}

RasterImage apply_crop(const RasterImage& img, double frac) {
  if (img.width < 20 || img.height < 20) {
    throw ImageTooSmall("crop requires at least 20x20 input");
  }
  const int x0 = static_cast<int>(std::floor(frac * img.width));
  const int y0 = static_cast<int>(std::floor(frac * img.height));
  const int w = static_cast<int>(std::floor((1.0 - 2.0 * frac) * img.width));
  const int h = static_cast<int>(std::floor((1.0 - 2.0 * frac) * img.height));
  RasterImage out(w, h);
  for (int y = 0; y < h; ++y) {
    std::memcpy(out.at(0, y), img.at(x0, y0 + y), static_cast<std::size_t>(w) * 3);
  }
  return out;
}

RasterImage apply_mirror(const RasterImage& img, MirrorAxis axis) {
  RasterImage out(img.width, img.height);
  if (axis == MirrorAxis::horizontal) {
    for (int y = 0; y < img.height; ++y) {
      for (int x = 0; x < img.width; ++x) {
        std::memcpy(out.at(x, y), img.at(img.width - 1 - x, y), 3);
      }
    }
  } else {
    for (int y = 0; y < img.height; ++y) {
      std::memcpy(out.at(0, y), img.at(0, img.height - 1 - y),
                  static_cast<std::size_t>(img.width) * 3);
    }
  }
  return out;
}

RasterImage apply_scale(const RasterImage& img, double factor, Kernel kernel) {
  const int w = std::max(1, static_cast<int>(std::floor(img.width * factor)));
  const int h = std::max(1, static_cast<int>(std::floor(img.height * factor)));
  return resize(img, w, h, kernel);
}

RasterImage apply_thumb96(const RasterImage& img, int box, Kernel kernel, int jpeg_quality) {
  const RasterImage thumb = fit_within(img, box, kernel);
  // Cache entries are stored compressed; mimic that with a JPEG round trip.
  return decode_image(encode_jpeg(thumb, jpeg_quality));
}

RasterImage apply_watermark(const RasterImage& img, double height_frac, int min_px) {
  if (img.height < min_px) {
    throw ImageTooSmall("watermark requires image height >= " + std::to_string(min_px));
  }
  const RasterImage& asset = watermark_asset();

  const int stamp_h = std::max(static_cast<int>(std::lround(height_frac * img.height)), min_px);
  const int stamp_w = std::max(
      1, static_cast<int>(std::lround(static_cast<double>(asset.width) * stamp_h / asset.height)));
  const int margin = std::max(static_cast<int>(std::lround(0.02 * img.width)), 4);

  if (stamp_w + margin > img.width || stamp_h + margin > img.height) {
    throw ImageTooSmall("watermark stamp does not fit inside the image");
  }

  const RasterImage stamp = resize(asset, stamp_w, stamp_h, Kernel::bicubic);
  RasterImage out = img;
  const int x0 = img.width - margin - stamp_w;
  const int y0 = img.height - margin - stamp_h;
  for (int y = 0; y < stamp_h; ++y) {
    std::memcpy(out.at(x0, y0 + y), stamp.at(0, y), static_cast<std::size_t>(stamp_w) * 3);
  }
  return out;
}

RasterImage apply(const ModificationSpec& spec, const RasterImage& img) {
  switch (spec.kind) {
    case ModKind::border: return apply_border(img, spec.border_px);
    case ModKind::compression: return apply_compression(img, spec.jpeg_quality);
    case ModKind::crop: return apply_crop(img, spec.crop_frac);
    case ModKind::mirror: return apply_mirror(img, spec.mirror_axis);
    case ModKind::scale: return apply_scale(img, spec.scale_factor, spec.scale_kernel);
    case ModKind::thumb96:
      return apply_thumb96(img, spec.thumb_box, spec.scale_kernel, spec.thumb_jpeg_quality);
    case ModKind::watermark:
      return apply_watermark(img, spec.watermark_height_frac, spec.watermark_min_px);
  }
  throw UnknownAlgorithm("unhandled modification kind");
}

}  // namespace pixhash
