// Deterministic synthetic photo corpus generator, used to build test corpora.

#include <CLI11.hpp>

#include "pixhash/image.hpp"
#include "pixhash/synth.hpp"

int main(int argc, char** argv) {
  CLI::App app{"pixgen - deterministic synthetic photo corpus generator"};

  std::string out_dir;
  std::uint64_t seed = 1;
  int count = 100;
  int quality = 93;
  int workers = 2;
  int long_edge = 500;
  bool png = false;

  app.add_option("--out", out_dir, "output directory")->required();
  app.add_option("--seed", seed, "corpus seed");
  app.add_option("--count", count, "number of images")->check(CLI::PositiveNumber);
  app.add_option("--quality", quality, "JPEG quality")->check(CLI::Range(1, 100));
  app.add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--long-edge", long_edge, "long edge in pixels")->check(CLI::Range(32, 4096));
  app.add_flag("--png", png, "write lossless PNG instead of JPEG");

  CLI11_PARSE(app, argc, argv);

  try {
    if (png) {
      std::filesystem::create_directories(out_dir);
      for (int i = 0; i < count; ++i) {
        const auto img =
            pixhash::synth_photo(seed, static_cast<std::uint32_t>(i), long_edge);
        char name[32];
        std::snprintf(name, sizeof(name), "img%05d.png", i);
        pixhash::write_file(std::filesystem::path(out_dir) / name, pixhash::encode_png(img));
      }
    } else {
      pixhash::generate_corpus(out_dir, seed, count, quality, workers, long_edge);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "pixgen: %s\n", e.what());
    return 2;
  }
  std::printf("wrote %d images to %s\n", count, out_dir.c_str());
  return 0;
}
