#include <algorithm>
#include <cmath>
#include <cstdio>
#include <thread>

#include "pixhash/synth.hpp"

namespace pixhash {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t s) : state(s) {}
  std::uint64_t next() { return splitmix64(state); }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int range(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
  bool chance(double p) { return uniform() < p; }
};

// Hash-based lattice noise, no tables.
double lattice(std::uint64_t seed, int ix, int iy) {
  std::uint64_t s = seed ^ (static_cast<std::uint64_t>(static_cast<std::uint32_t>(ix)) << 32) ^
                    static_cast<std::uint32_t>(iy);
  return static_cast<double>(splitmix64(s) >> 11) * 0x1.0p-53;
}

double smoothstep(double t) { return t * t * (3.0 - 2.0 * t); }

double value_noise(std::uint64_t seed, double x, double y) {
  const int ix = static_cast<int>(std::floor(x));
  const int iy = static_cast<int>(std::floor(y));
  const double fx = smoothstep(x - ix);
  const double fy = smoothstep(y - iy);
  const double a = lattice(seed, ix, iy);
  const double b = lattice(seed, ix + 1, iy);
  const double c = lattice(seed, ix, iy + 1);
  const double d = lattice(seed, ix + 1, iy + 1);
  return (a * (1 - fx) + b * fx) * (1 - fy) + (c * (1 - fx) + d * fx) * fy;
}

// Fractal noise in [0,1]. Octaves whose lattice spacing would drop under
// ~5 px are skipped; real photographs are band-limited by the lens, and the
// hashes' resize stages assume that.
double fbm(std::uint64_t seed, double x, double y, int octaves, double base_scale) {
  double sum = 0.0, amp = 1.0, norm = 0.0, freq = 1.0;
  for (int o = 0; o < octaves; ++o) {
    if (base_scale * freq > 0.2) break;
    sum += amp * value_noise(seed + static_cast<std::uint64_t>(o) * 0x9e37u, x * freq, y * freq);
    norm += amp;
    amp *= 0.5;
    freq *= 2.0;
  }
  return norm > 0.0 ? sum / norm : 0.5;
}

struct Color {
  double r, g, b;
};

Color hsv(double h, double s, double v) {
  h = std::fmod(std::fmod(h, 360.0) + 360.0, 360.0) / 60.0;
  const int i = static_cast<int>(h);
  const double f = h - i;
  const double p = v * (1 - s), q = v * (1 - s * f), t = v * (1 - s * (1 - f));
  switch (i % 6) {
    case 0: return {v, t, p};
    case 1: return {q, v, p};
    case 2: return {p, v, t};
    case 3: return {p, q, v};
    case 4: return {t, p, v};
    default: return {v, p, q};
  }
}

Color mix(const Color& a, const Color& b, double t) {
  return {a.r + (b.r - a.r) * t, a.g + (b.g - a.g) * t, a.b + (b.b - a.b) * t};
}

struct Canvas {
  int w, h;
  std::vector<double> r, g, b;
  Canvas(int width, int height)
      : w(width),
        h(height),
        r(static_cast<std::size_t>(width) * height),
        g(r.size()),
        b(r.size()) {}
  void set(std::size_t i, const Color& c) {
    r[i] = c.r;
    g[i] = c.g;
    b[i] = c.b;
  }
  Color get(std::size_t i) const { return {r[i], g[i], b[i]}; }
};

// Vertical two-colour gradient with a noisy blend line.
void paint_gradient(Canvas& cv, Rng& rng, const Color& top, const Color& bottom,
                    std::uint64_t noise_seed) {
  const double wobble = rng.uniform(0.0, 0.25);
  std::size_t i = 0;
  for (int y = 0; y < cv.h; ++y) {
    const double ty = static_cast<double>(y) / cv.h;
    for (int x = 0; x < cv.w; ++x, ++i) {
      const double n = wobble * (value_noise(noise_seed, x * 0.01, y * 0.01) - 0.5);
      cv.set(i, mix(top, bottom, std::clamp(ty + n, 0.0, 1.0)));
    }
  }
}

void paint_fbm_layer(Canvas& cv, Rng& rng, const Color& c0, const Color& c1, double scale,
                     int octaves, double opacity, std::uint64_t seed) {
  (void)rng;
  std::size_t i = 0;
  for (int y = 0; y < cv.h; ++y) {
    for (int x = 0; x < cv.w; ++x, ++i) {
      const double t = fbm(seed, x * scale, y * scale, octaves, scale);
      const Color layer = mix(c0, c1, t);
      cv.set(i, mix(cv.get(i), layer, opacity));
    }
  }
}

void paint_ellipse(Canvas& cv, double cx, double cy, double rx, double ry, double angle,
                   const Color& color, double softness) {
  const double ca = std::cos(angle), sa = std::sin(angle);
  const int x0 = std::max(0, static_cast<int>(cx - rx - ry - 2));
  const int x1 = std::min(cv.w - 1, static_cast<int>(cx + rx + ry + 2));
  const int y0 = std::max(0, static_cast<int>(cy - rx - ry - 2));
  const int y1 = std::min(cv.h - 1, static_cast<int>(cy + rx + ry + 2));
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) {
      const double dx = x - cx, dy = y - cy;
      const double u = (dx * ca + dy * sa) / rx;
      const double v = (-dx * sa + dy * ca) / ry;
      const double d = u * u + v * v;
      if (d >= 1.0) continue;
      const double alpha = std::min(1.0, (1.0 - d) / softness);
      const std::size_t i = static_cast<std::size_t>(y) * cv.w + x;
      cv.set(i, mix(cv.get(i), color, alpha));
    }
  }
}

void paint_rect(Canvas& cv, int x0, int y0, int w, int h, const Color& color, double opacity) {
  const int x1 = std::min(cv.w, x0 + w);
  const int y1 = std::min(cv.h, y0 + h);
  for (int y = std::max(0, y0); y < y1; ++y) {
    for (int x = std::max(0, x0); x < x1; ++x) {
      const std::size_t i = static_cast<std::size_t>(y) * cv.w + x;
      cv.set(i, mix(cv.get(i), color, opacity));
    }
  }
}

Color random_color(Rng& rng, double s_lo, double s_hi, double v_lo, double v_hi) {
  return hsv(rng.uniform(0, 360), rng.uniform(s_lo, s_hi), rng.uniform(v_lo, v_hi));
}

// Separable 1-2-1 blur, the finite lens/demosaic MTF every camera applies.
void blur_plane(std::vector<double>& p, int w, int h) {
  std::vector<double> tmp(p.size());
  for (int y = 0; y < h; ++y) {
    const double* row = p.data() + static_cast<std::size_t>(y) * w;
    double* out = tmp.data() + static_cast<std::size_t>(y) * w;
    for (int x = 0; x < w; ++x) {
      const double l = row[std::max(0, x - 1)];
      const double r = row[std::min(w - 1, x + 1)];
      out[x] = 0.25 * l + 0.5 * row[x] + 0.25 * r;
    }
  }
  for (int x = 0; x < w; ++x) {
    for (int y = 0; y < h; ++y) {
      const double u = tmp[static_cast<std::size_t>(std::max(0, y - 1)) * w + x];
      const double c = tmp[static_cast<std::size_t>(y) * w + x];
      const double d = tmp[static_cast<std::size_t>(std::min(h - 1, y + 1)) * w + x];
      p[static_cast<std::size_t>(y) * w + x] = 0.25 * u + 0.5 * c + 0.25 * d;
    }
  }
}

void scene_landscape(Canvas& cv, Rng& rng) {
  const double sky_hue = rng.chance(0.7) ? rng.uniform(190, 230) : rng.uniform(10, 50);
  const Color sky_top = hsv(sky_hue, rng.uniform(0.2, 0.6), rng.uniform(0.7, 0.95));
  const Color sky_bot = hsv(sky_hue + rng.uniform(-20, 20), rng.uniform(0.1, 0.4),
                            rng.uniform(0.75, 1.0));
  paint_gradient(cv, rng, sky_top, sky_bot, rng.next());

  // Terrain band over the lower part, with a noisy horizon.
  const double horizon = rng.uniform(0.35, 0.7);
  const Color ground0 = random_color(rng, 0.25, 0.8, 0.15, 0.55);
  const Color ground1 = random_color(rng, 0.2, 0.7, 0.25, 0.7);
  const std::uint64_t hseed = rng.next();
  const std::uint64_t gseed = rng.next();
  const double rough = rng.uniform(0.02, 0.12);
  for (int x = 0; x < cv.w; ++x) {
    const double hline =
        horizon + rough * (fbm(hseed, x * 0.008, 0.0, 3, 0.008) - 0.5) * 2.0;
    const int ytop = std::clamp(static_cast<int>(hline * cv.h), 0, cv.h - 1);
    for (int y = ytop; y < cv.h; ++y) {
      const double t = fbm(gseed, x * 0.02, y * 0.02, 4, 0.02);
      const std::size_t i = static_cast<std::size_t>(y) * cv.w + x;
      cv.set(i, mix(ground0, ground1, t));
    }
  }

  if (rng.chance(0.4)) {  // sun / moon
    const Color disc = hsv(rng.uniform(30, 60), rng.uniform(0.1, 0.7), rng.uniform(0.85, 1.0));
    paint_ellipse(cv, rng.uniform(0.1, 0.9) * cv.w, rng.uniform(0.08, 0.3) * cv.h,
                  rng.uniform(0.03, 0.1) * cv.w, rng.uniform(0.03, 0.1) * cv.w, 0.0, disc, 0.3);
  }
  if (rng.chance(0.6)) {  // cloud streaks
    paint_fbm_layer(cv, rng, hsv(0, 0, 1.0), hsv(0, 0, 0.85), 0.004, 3,
                    rng.uniform(0.08, 0.25), rng.next());
  }
  // Foreground clutter along the ground band.
  const int clutter = rng.range(9);
  for (int k = 0; k < clutter; ++k) {
    paint_ellipse(cv, rng.uniform(0.02, 0.98) * cv.w, rng.uniform(horizon, 1.0) * cv.h,
                  rng.uniform(0.02, 0.12) * cv.w, rng.uniform(0.02, 0.1) * cv.h,
                  rng.uniform(0, 3.1415), random_color(rng, 0.15, 0.9, 0.1, 0.8),
                  rng.uniform(0.1, 0.5));
  }
}

void scene_texture(Canvas& cv, Rng& rng) {
  const Color c0 = random_color(rng, 0.3, 0.9, 0.1, 0.6);
  const Color c1 = random_color(rng, 0.2, 0.8, 0.4, 0.95);
  paint_gradient(cv, rng, c0, c1, rng.next());
  const int layers = 1 + rng.range(2);
  for (int l = 0; l < layers; ++l) {
    paint_fbm_layer(cv, rng, random_color(rng, 0.2, 0.9, 0.1, 0.9),
                    random_color(rng, 0.2, 0.9, 0.1, 0.9), rng.uniform(0.004, 0.05), 4,
                    rng.uniform(0.4, 0.8), rng.next());
  }
}

void scene_objects(Canvas& cv, Rng& rng) {
  paint_gradient(cv, rng, random_color(rng, 0.05, 0.5, 0.4, 0.95),
                 random_color(rng, 0.05, 0.5, 0.2, 0.8), rng.next());
  if (rng.chance(0.5)) {
    paint_fbm_layer(cv, rng, random_color(rng, 0.1, 0.5, 0.2, 0.8),
                    random_color(rng, 0.1, 0.5, 0.2, 0.8), rng.uniform(0.005, 0.02), 3,
                    rng.uniform(0.15, 0.4), rng.next());
  }
  const int n = 6 + rng.range(12);
  for (int k = 0; k < n; ++k) {
    paint_ellipse(cv, rng.uniform(0.05, 0.95) * cv.w, rng.uniform(0.05, 0.95) * cv.h,
                  rng.uniform(0.03, 0.3) * cv.w, rng.uniform(0.03, 0.3) * cv.h,
                  rng.uniform(0, 3.1415), random_color(rng, 0.2, 1.0, 0.15, 1.0),
                  rng.uniform(0.05, 0.6));
  }
}

void scene_urban(Canvas& cv, Rng& rng) {
  const Color sky = hsv(rng.uniform(180, 250), rng.uniform(0.1, 0.5), rng.uniform(0.6, 0.95));
  paint_gradient(cv, rng, sky, mix(sky, hsv(30, 0.2, 0.9), 0.5), rng.next());
  const int buildings = 4 + rng.range(7);
  for (int k = 0; k < buildings; ++k) {
    const int bw = static_cast<int>(rng.uniform(0.08, 0.25) * cv.w);
    const int bh = static_cast<int>(rng.uniform(0.3, 0.85) * cv.h);
    const int bx = static_cast<int>(rng.uniform(-0.05, 0.95) * cv.w);
    const Color wall = hsv(rng.uniform(0, 360), rng.uniform(0.03, 0.35), rng.uniform(0.15, 0.75));
    paint_rect(cv, bx, cv.h - bh, bw, bh, wall, 1.0);
    // window grid
    const Color lit = hsv(rng.uniform(35, 55), rng.uniform(0.2, 0.7), rng.uniform(0.7, 1.0));
    const int wsz = std::max(2, bw / 8);
    for (int wy = cv.h - bh + wsz; wy + wsz < cv.h - 2; wy += 2 * wsz) {
      for (int wx = bx + wsz; wx + wsz < bx + bw - 1; wx += 2 * wsz) {
        if (rng.chance(0.55)) paint_rect(cv, wx, wy, wsz, wsz, lit, 0.9);
      }
    }
  }
}

void scene_closeup(Canvas& cv, Rng& rng) {
  paint_gradient(cv, rng, random_color(rng, 0.2, 0.8, 0.1, 0.5),
                 random_color(rng, 0.2, 0.8, 0.3, 0.8), rng.next());
  const Color subject = random_color(rng, 0.3, 1.0, 0.4, 1.0);
  paint_ellipse(cv, rng.uniform(0.3, 0.7) * cv.w, rng.uniform(0.3, 0.7) * cv.h,
                rng.uniform(0.25, 0.45) * cv.w, rng.uniform(0.25, 0.45) * cv.h,
                rng.uniform(0, 3.1415), subject, rng.uniform(0.3, 0.9));
  paint_fbm_layer(cv, rng, mix(subject, hsv(0, 0, 0), 0.5), mix(subject, hsv(0, 0, 1), 0.3),
                  rng.uniform(0.01, 0.06), 4, rng.uniform(0.2, 0.5), rng.next());
  const int details = rng.range(6);
  for (int k = 0; k < details; ++k) {
    paint_ellipse(cv, rng.uniform(0.1, 0.9) * cv.w, rng.uniform(0.1, 0.9) * cv.h,
                  rng.uniform(0.02, 0.08) * cv.w, rng.uniform(0.02, 0.08) * cv.h,
                  rng.uniform(0, 3.1415), random_color(rng, 0.2, 1.0, 0.2, 1.0), 0.4);
  }
}

}  // namespace

RasterImage synth_photo(std::uint64_t seed, std::uint32_t index, int long_edge) {
  std::uint64_t s0 = seed ^ (0xa076'1d64'78bd'642fULL * (index + 1));
  Rng rng(splitmix64(s0));

  // Flickr-like framing: fixed long edge, mixed aspect ratios, occasional
  // off-by-a-few sizes so fractional block paths get exercised.
  static constexpr std::pair<int, int> kAspects[] = {{4, 3}, {3, 2}, {5, 4}, {16, 9}, {1, 1}};
  const auto [an, ad] = kAspects[rng.range(5)];
  int long_px = long_edge - rng.range(std::max(2, long_edge / 10));
  int short_px = std::max(32, long_px * ad / an - rng.range(7));
  const bool portrait = rng.chance(0.3);
  const int w = portrait ? short_px : long_px;
  const int h = portrait ? long_px : short_px;

  Canvas cv(w, h);
  const int pick = rng.range(100);
  if (pick < 25) {
    scene_landscape(cv, rng);
  } else if (pick < 45) {
    scene_texture(cv, rng);
  } else if (pick < 70) {
    scene_objects(cv, rng);
  } else if (pick < 85) {
    scene_urban(cv, rng);
  } else {
    scene_closeup(cv, rng);
  }

  // Low-frequency coloured ambient light; keeps any one surface from holding
  // a single exact saturation value across its whole extent.
  {
    const double amp = rng.uniform(0.03, 0.08);
    const std::uint64_t sr = rng.next(), sg = rng.next(), sb = rng.next();
    std::size_t i = 0;
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x, ++i) {
        Color c = cv.get(i);
        c.r += (fbm(sr, x * 0.008, y * 0.008, 2, 0.008) - 0.5) * amp;
        c.g += (fbm(sg, x * 0.008, y * 0.008, 2, 0.008) - 0.5) * amp;
        c.b += (fbm(sb, x * 0.008, y * 0.008, 2, 0.008) - 0.5) * amp;
        cv.set(i, c);
      }
    }
  }

  // Global lighting tilt.
  if (rng.chance(0.5)) {
    const double gx = rng.uniform(-0.25, 0.25), gy = rng.uniform(-0.25, 0.25);
    std::size_t i = 0;
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x, ++i) {
        const double f = 1.0 + gx * (2.0 * x / w - 1.0) + gy * (2.0 * y / h - 1.0);
        Color c = cv.get(i);
        cv.set(i, {c.r * f, c.g * f, c.b * f});
      }
    }
  }
  // Mild vignette on some shots.
  if (rng.chance(0.3)) {
    const double strength = rng.uniform(0.1, 0.35);
    std::size_t i = 0;
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x, ++i) {
        const double dx = 2.0 * x / w - 1.0, dy = 2.0 * y / h - 1.0;
        const double f = 1.0 - strength * (dx * dx + dy * dy) * 0.5;
        Color c = cv.get(i);
        cv.set(i, {c.r * f, c.g * f, c.b * f});
      }
    }
  }

  blur_plane(cv.r, w, h);
  blur_plane(cv.g, w, h);
  blur_plane(cv.b, w, h);

  // Exposure floor: stretch washed-out frames to a photographic contrast.
  {
    double mean = 0.0, sq = 0.0;
    for (std::size_t i = 0; i < cv.r.size(); ++i) {
      const double l = 0.299 * cv.r[i] + 0.587 * cv.g[i] + 0.114 * cv.b[i];
      mean += l;
      sq += l * l;
    }
    const double n = static_cast<double>(cv.r.size());
    mean /= n;
    const double std = std::sqrt(std::max(0.0, sq / n - mean * mean));
    if (std < 0.20 && std > 1e-6) {
      const double f = std::min(6.0, 0.20 / std);
      for (std::size_t i = 0; i < cv.r.size(); ++i) {
        cv.r[i] = mean + (cv.r[i] - mean) * f;
        cv.g[i] = mean + (cv.g[i] - mean) * f;
        cv.b[i] = mean + (cv.b[i] - mean) * f;
      }
    }
  }

  // A slice of the corpus is monochrome, as in any real photo collection.
  const bool grayscale = rng.chance(0.05);

  const double noise_amp = rng.uniform(0.002, 0.012);
  const std::uint64_t nseed = rng.next();

  RasterImage img(w, h);
  std::uint8_t* p = img.pixels.data();
  std::size_t i = 0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x, ++i, p += 3) {
      Color c = cv.get(i);
      if (grayscale) {
        const double l = 0.299 * c.r + 0.587 * c.g + 0.114 * c.b;
        c = {l, l, l};
      }
      // Per-channel sensor noise; correlated noise would freeze saturation.
      std::uint64_t ns = nseed ^ (i * 0x9e3779b97f4a7c15ULL);
      const double nr = (static_cast<double>(splitmix64(ns) >> 11) * 0x1.0p-53 - 0.5) * noise_amp;
      const double ng = (static_cast<double>(splitmix64(ns) >> 11) * 0x1.0p-53 - 0.5) * noise_amp;
      const double nb = (static_cast<double>(splitmix64(ns) >> 11) * 0x1.0p-53 - 0.5) * noise_amp;
      p[0] = static_cast<std::uint8_t>(std::clamp((c.r + nr) * 255.0, 0.0, 255.0));
      p[1] = static_cast<std::uint8_t>(std::clamp((c.g + ng) * 255.0, 0.0, 255.0));
      p[2] = static_cast<std::uint8_t>(std::clamp((c.b + nb) * 255.0, 0.0, 255.0));
    }
  }
  return img;
}

void generate_corpus(const std::filesystem::path& dir, std::uint64_t seed, int count,
                     int jpeg_quality, int workers, int long_edge) {
  std::filesystem::create_directories(dir);
  if (workers < 1) workers = 1;
  std::vector<std::thread> threads;
  for (int t = 0; t < workers; ++t) {
    threads.emplace_back([&, t] {
      for (int i = t; i < count; i += workers) {
        const RasterImage img = synth_photo(seed, static_cast<std::uint32_t>(i), long_edge);
        char name[32];
        std::snprintf(name, sizeof(name), "img%05d.jpg", i);
        write_file(dir / name, encode_jpeg(img, jpeg_quality));
      }
    });
  }
  for (auto& t : threads) t.join();
}

}  // namespace pixhash
