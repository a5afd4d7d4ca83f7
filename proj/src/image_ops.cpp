#include <algorithm>
#include <cmath>
#include <cstring>

#include "pixhash/image.hpp"

namespace pixhash {

const char* kernel_name(Kernel k) {
  switch (k) {
    case Kernel::nearest: return "nearest";
    case Kernel::bilinear: return "bilinear";
    case Kernel::box_area: return "box";
    case Kernel::bicubic: return "bicubic";
  }
  return "?";
}

Kernel kernel_from_name(const std::string& name) {
  if (name == "nearest") return Kernel::nearest;
  if (name == "bilinear") return Kernel::bilinear;
  if (name == "box" || name == "box-area") return Kernel::box_area;
  if (name == "bicubic") return Kernel::bicubic;
  throw UnknownAlgorithm("unknown kernel '" + name + "' (nearest|bilinear|box|bicubic)");
}

GrayBuffer to_luma(const RasterImage& img) {
  GrayBuffer out(img.width, img.height);
  const std::uint8_t* p = img.pixels.data();
  for (std::size_t i = 0, n = out.values.size(); i < n; ++i, p += 3) {
    out.values[i] = 0.299 * p[0] + 0.587 * p[1] + 0.114 * p[2];
  }
  return out;
}

namespace {

// One output sample's source taps for a separable 1-D resampling pass.
struct Taps {
  int start = 0;
  std::vector<double> w;
};

// Catmull-Rom (Keys a = -1/2) cubic kernel.
double cubic_weight(double t) {
  t = std::abs(t);
  if (t <= 1.0) return (1.5 * t - 2.5) * t * t + 1.0;
  if (t < 2.0) return ((-0.5 * t + 2.5) * t - 4.0) * t + 2.0;
  return 0.0;
}

std::vector<Taps> make_taps(int in, int out, Kernel kernel) {
  std::vector<Taps> taps(out);
  const double scale = static_cast<double>(in) / out;

  auto clamp_idx = [in](int i) { return std::clamp(i, 0, in - 1); };

  for (int x = 0; x < out; ++x) {
    Taps& t = taps[x];
    switch (kernel) {
      case Kernel::nearest: {
        t.start = clamp_idx(static_cast<int>((x + 0.5) * scale));
        t.w = {1.0};
        break;
      }
      case Kernel::bilinear: {
        const double src = (x + 0.5) * scale - 0.5;
        const int i0 = static_cast<int>(std::floor(src));
        const double f = src - i0;
        t.start = clamp_idx(i0);
        const int i1 = clamp_idx(i0 + 1);
        if (i1 == t.start) {
          t.w = {1.0};
        } else {
          t.w = {1.0 - f, f};
        }
        break;
      }
      case Kernel::bicubic: {
        const double src = (x + 0.5) * scale - 0.5;
        const int i0 = static_cast<int>(std::floor(src));
        const double f = src - i0;
        // Taps at i0-1 .. i0+2; edge taps fold onto the clamped index.
        const double w[4] = {cubic_weight(1.0 + f), cubic_weight(f), cubic_weight(1.0 - f),
                             cubic_weight(2.0 - f)};
        const int lo = clamp_idx(i0 - 1);
        const int hi = clamp_idx(i0 + 2);
        t.start = lo;
        t.w.assign(static_cast<std::size_t>(hi - lo + 1), 0.0);
        for (int k = 0; k < 4; ++k) {
          t.w[static_cast<std::size_t>(clamp_idx(i0 - 1 + k) - lo)] += w[k];
        }
        break;
      }
      case Kernel::box_area: {
        const double lo = x * scale;
        const double hi = (x + 1) * scale;
        const int i_lo = static_cast<int>(std::floor(lo));
        int i_hi = static_cast<int>(std::ceil(hi));
        i_hi = std::min(i_hi, in);
        t.start = i_lo;
        t.w.assign(static_cast<std::size_t>(i_hi - i_lo), 0.0);
        double total = 0.0;
        for (int i = i_lo; i < i_hi; ++i) {
          const double overlap = std::min<double>(hi, i + 1) - std::max<double>(lo, i);
          t.w[static_cast<std::size_t>(i - i_lo)] = overlap;
          total += overlap;
        }
        for (auto& v : t.w) v /= total;
        break;
      }
    }
  }
  return taps;
}

// Two-pass separable resample of `channels` interleaved double planes.
std::vector<double> resample_planes(const double* src, int in_w, int in_h, int channels,
                                    int out_w, int out_h, Kernel kernel) {
  const auto tx = make_taps(in_w, out_w, kernel);
  const auto ty = make_taps(in_h, out_h, kernel);

  // Horizontal pass: in_w x in_h -> out_w x in_h.
  std::vector<double> mid(static_cast<std::size_t>(out_w) * in_h * channels, 0.0);
  for (int y = 0; y < in_h; ++y) {
    const double* row = src + static_cast<std::size_t>(y) * in_w * channels;
    double* mrow = mid.data() + static_cast<std::size_t>(y) * out_w * channels;
    for (int x = 0; x < out_w; ++x) {
      const Taps& t = tx[static_cast<std::size_t>(x)];
      for (int c = 0; c < channels; ++c) {
        double acc = 0.0;
        for (std::size_t k = 0; k < t.w.size(); ++k) {
          acc += t.w[k] * row[(t.start + k) * channels + c];
        }
        mrow[static_cast<std::size_t>(x) * channels + c] = acc;
      }
    }
  }

  // Vertical pass: out_w x in_h -> out_w x out_h.
  std::vector<double> out(static_cast<std::size_t>(out_w) * out_h * channels, 0.0);
  for (int y = 0; y < out_h; ++y) {
    const Taps& t = ty[static_cast<std::size_t>(y)];
    double* orow = out.data() + static_cast<std::size_t>(y) * out_w * channels;
    for (std::size_t k = 0; k < t.w.size(); ++k) {
      const double w = t.w[k];
      const double* mrow = mid.data() + (static_cast<std::size_t>(t.start) + k) * out_w * channels;
      for (std::size_t i = 0, n = static_cast<std::size_t>(out_w) * channels; i < n; ++i) {
        orow[i] += w * mrow[i];
      }
    }
  }
  return out;
}

}  // namespace

RasterImage resize(const RasterImage& img, int new_w, int new_h, Kernel kernel) {
  if (new_w < 1 || new_h < 1) throw Error("resize: target dimensions must be >= 1");
  if (new_w == img.width && new_h == img.height && kernel != Kernel::nearest) {
    // All kernels are exact at identity; skip the float round trip.
    return img;
  }
  std::vector<double> src(img.pixels.begin(), img.pixels.end());
  const auto out =
      resample_planes(src.data(), img.width, img.height, 3, new_w, new_h, kernel);
  RasterImage result(new_w, new_h);
  for (std::size_t i = 0; i < out.size(); ++i) {
    result.pixels[i] =
        static_cast<std::uint8_t>(std::clamp<long>(std::lround(out[i]), 0, 255));
  }
  return result;
}

GrayBuffer resize(const GrayBuffer& img, int new_w, int new_h, Kernel kernel) {
  if (new_w < 1 || new_h < 1) throw Error("resize: target dimensions must be >= 1");
  const auto out =
      resample_planes(img.values.data(), img.width, img.height, 1, new_w, new_h, kernel);
  GrayBuffer result(new_w, new_h);
  for (std::size_t i = 0; i < out.size(); ++i) {
    result.values[i] = std::clamp(out[i], 0.0, 255.0);
  }
  return result;
}

RasterImage fit_within(const RasterImage& img, int box, Kernel kernel) {
  if (box < 1) throw Error("fit_within: box must be >= 1");
  if (std::max(img.width, img.height) <= box) return img;
  int out_w, out_h;
  if (img.width >= img.height) {
    out_w = box;
    out_h = std::max(1, static_cast<int>(static_cast<std::int64_t>(img.height) * box / img.width));
  } else {
    out_h = box;
    out_w = std::max(1, static_cast<int>(static_cast<std::int64_t>(img.width) * box / img.height));
  }
  return resize(img, out_w, out_h, kernel);
}

}  // namespace pixhash
