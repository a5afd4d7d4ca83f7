// Command-line front end: corpus hashing, modifications, inter/intra distance
// experiments, golden-vector checks, and consolidated reports.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "pixhash/golden.hpp"
#include "pixhash/harness.hpp"
#include "pixhash/hashes.hpp"
#include "pixhash/mods.hpp"
#include "pixhash/reports.hpp"
#include "pixhash/synth.hpp"
#include "pixhash/version.hpp"

namespace {

using namespace pixhash;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitAcceptance = 3;

struct Options {
  std::string corpus;
  std::string out = "pixhash-out";
  std::uint64_t seed = 20221207;
  int k = 50;
  std::string algos = "blockhash,colourhash,pdq,phash,wavehash";
  std::string mods = "border,compression,crop,mirror,scale,thumb96,watermark";
  int workers = 1;
  std::string kernel = "bicubic";
  bool dedup = true;
  std::string mirror_axis = "horizontal";
};

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    const auto piece = s.substr(start, comma == std::string::npos ? comma : comma - start);
    if (!piece.empty()) out.push_back(piece);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<Algo> parse_algos(const std::string& csv) {
  std::vector<Algo> algos;
  for (const auto& name : split_csv(csv)) {
    algos.push_back(algo_from_name(name));  // throws with the supported list
  }
  if (algos.empty()) throw UnknownAlgorithm("no algorithms selected");
  return algos;
}

std::vector<ModKind> parse_mods(const std::string& csv) {
  std::vector<ModKind> mods;
  for (const auto& name : split_csv(csv)) mods.push_back(mod_from_name(name));
  if (mods.empty()) throw UnknownAlgorithm("no modifications selected");
  return mods;
}

std::vector<std::string> algo_names(const std::vector<Algo>& algos) {
  std::vector<std::string> names;
  for (Algo a : algos) names.emplace_back(algo_name(a));
  return names;
}

ModificationSpec spec_for(ModKind kind, const Options& opt) {
  ModificationSpec spec = ModificationSpec::of(kind);
  spec.scale_kernel = kernel_from_name(opt.kernel);
  spec.mirror_axis =
      (opt.mirror_axis == "vertical") ? MirrorAxis::vertical : MirrorAxis::horizontal;
  return spec;
}

fs::path store_path(const Options& opt) { return fs::path(opt.out) / "hashes.tsv"; }
fs::path manifest_path(const Options& opt) { return fs::path(opt.out) / "manifest.json"; }

HashStore load_store(const Options& opt) {
  const auto path = store_path(opt);
  if (fs::exists(path)) return HashStore::load(path);
  return HashStore{};
}

void merge_sorted_unique(std::vector<std::string>& into, const std::vector<std::string>& add) {
  for (const auto& v : add) {
    if (std::find(into.begin(), into.end(), v) == into.end()) into.push_back(v);
  }
  std::sort(into.begin(), into.end());
}

/// Build or extend the run manifest. Seed, k, and corpus digest must stay
/// consistent across commands that share one output directory.
RunManifest update_manifest(const Options& opt, const CorpusIndex& index,
                            const std::vector<std::string>& algos,
                            const std::vector<std::string>& mods) {
  RunManifest m;
  const auto path = manifest_path(opt);
  if (fs::exists(path)) {
    m = RunManifest::load(path);
    if (m.seed != opt.seed || m.k_neighbours != opt.k || m.corpus_digest != index.corpus_digest) {
      throw FormatError(
          "output directory belongs to a different run (seed/k/corpus mismatch); use a fresh "
          "--out or the original settings");
    }
  } else {
    m.seed = opt.seed;
    m.k_neighbours = opt.k;
    m.corpus_digest = index.corpus_digest;
    m.tool_version = kToolVersion;
  }
  merge_sorted_unique(m.algorithms, algos);
  merge_sorted_unique(m.modifications, mods);
  if (opt.kernel != "bicubic") m.parameter_overrides["kernel"] = opt.kernel;
  if (opt.mirror_axis != "horizontal") m.parameter_overrides["mirror_axis"] = opt.mirror_axis;
  if (!opt.dedup) m.parameter_overrides["dedup"] = "false";
  m.parameter_overrides["watermark_asset"] = watermark_asset_digest();
  for (const auto& mod : m.modifications) {
    if (mod == "thumb96") m.emulation_flags["thumb96"] = kThumb96Emulated;
  }
  fs::create_directories(opt.out);
  m.save(path);
  return m;
}

void report_failures(const BatchResult& result, const Options& opt) {
  if (result.failures.empty()) return;
  const auto path = fs::path(opt.out) / "failures.log";
  std::ofstream log(path, std::ios::app);
  for (const auto& f : result.failures) {
    log << f.image_id << '\t' << f.message << '\n';
    std::cerr << "warning: " << f.image_id << ": " << f.message << '\n';
  }
}

int cmd_hash(const Options& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto algos = parse_algos(opt.algos);
  const CorpusIndex index = ingest_corpus(opt.corpus, opt.dedup);
  update_manifest(opt, index, algo_names(algos), {});

  HashStore store = load_store(opt);
  const BatchResult result =
      hash_corpus(index, algos, kOriginalVariant, nullptr, store, opt.workers);
  store.save(store_path(opt));
  report_failures(result, opt);

  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  std::cout << index.size() << " images, " << algos.size() << " algorithms: "
            << result.new_records << " new records, " << result.failures.size()
            << " failures in " << ms << " ms\n";
  for (Algo a : algos) {
    std::size_t count = 0;
    for (const auto& r : store.records()) {
      if (r.variant == kOriginalVariant && r.hash.name == algo_name(a)) ++count;
    }
    std::cout << "  " << algo_name(a) << ": " << count << " hashes\n";
  }
  return kExitOk;
}

int cmd_modify(const Options& opt, bool save_variants) {
  const auto algos = parse_algos(opt.algos);
  const auto mods = parse_mods(opt.mods);
  const CorpusIndex index = ingest_corpus(opt.corpus, opt.dedup);
  std::vector<std::string> mod_names;
  for (ModKind m : mods) mod_names.emplace_back(mod_name(m));
  update_manifest(opt, index, algo_names(algos), mod_names);

  HashStore store = load_store(opt);
  // Originals first; intra comparisons need them.
  BatchResult originals = hash_corpus(index, algos, kOriginalVariant, nullptr, store, opt.workers);
  report_failures(originals, opt);

  std::size_t new_records = originals.new_records;
  for (ModKind kind : mods) {
    const ModificationSpec spec = spec_for(kind, opt);
    const BatchResult result = hash_corpus(
        index, algos, mod_name(kind),
        [&spec](const RasterImage& img) { return apply(spec, img); }, store, opt.workers);
    new_records += result.new_records;
    report_failures(result, opt);

    if (save_variants) {
      const fs::path vdir = fs::path(opt.out) / "variants";
      fs::create_directories(vdir);
      for (const auto& entry : index.entries) {
        try {
          const RasterImage img = read_image_file(entry.path);
          std::string id = entry.id;
          std::replace(id.begin(), id.end(), '/', '_');
          // Lossy attacks persist as JPEG (their own bytes); the rest as PNG.
          if (kind == ModKind::compression) {
            write_file(vdir / (id + ".compression.jpg"), encode_jpeg(img, spec.jpeg_quality));
          } else if (kind == ModKind::thumb96) {
            const RasterImage thumb = fit_within(img, spec.thumb_box, spec.scale_kernel);
            write_file(vdir / (id + ".thumb96.jpg"),
                       encode_jpeg(thumb, spec.thumb_jpeg_quality));
          } else {
            write_file(vdir / (id + "." + mod_name(kind) + ".png"),
                       encode_png(apply(spec, img)));
          }
        } catch (const Error& e) {
          std::cerr << "warning: " << entry.id << ": " << e.what() << '\n';
        }
      }
    }
  }
  store.save(store_path(opt));
  std::cout << mods.size() << " modifications over " << index.size() << " images: "
            << new_records << " new records\n";
  return kExitOk;
}

void write_experiment_outputs(const Options& opt, const std::string& tag,
                              const std::string& modification,
                              const std::vector<ExperimentResult>& results) {
  std::vector<StatsRow> rows;
  for (const auto& r : results) {
    rows.push_back({r.algo, modification, r.distances.stats()});
  }
  write_stats_csv(fs::path(opt.out) / (tag + ".csv"), rows);
  for (const auto& r : results) {
    try {
      const HistogramSeries h = histogram_npdf(r.distances);
      write_histogram_csv(fs::path(opt.out) / ("hist_" + tag + "_" + r.algo + ".csv"), h);
      write_histogram_svg(fs::path(opt.out) / ("hist_" + tag + "_" + r.algo + ".svg"), h,
                          tag + " " + r.algo);
    } catch (const DegenerateSample&) {
      // A single-point distribution has no histogram; the stats row stands.
    }
  }
}

int cmd_inter(const Options& opt, const std::string& variant) {
  const auto algos = parse_algos(opt.algos);
  const CorpusIndex index = ingest_corpus(opt.corpus, opt.dedup);
  const RunManifest manifest = update_manifest(opt, index, algo_names(algos), {});
  const HashStore store = load_store(opt);

  try {
    const auto results =
        run_inter(store, index, manifest, variant, algo_names(algos), opt.workers);
    write_experiment_outputs(opt, "inter_" + variant, "", results);
    for (const auto& r : results) {
      const auto s = r.distances.stats();
      std::cout << "inter " << variant << ' ' << r.algo << ": n=" << s.n
                << " mean=" << format_fixed(s.mean) << " stdev=" << format_fixed(s.stdev) << '\n';
    }
  } catch (const MissingHashes& e) {
    throw MissingHashes(std::string(e.what()) + " (run `pixhash hash` or `pixhash modify` first)");
  }
  return kExitOk;
}

int cmd_intra(const Options& opt) {
  const auto algos = parse_algos(opt.algos);
  const auto mods = parse_mods(opt.mods);
  const CorpusIndex index = ingest_corpus(opt.corpus, opt.dedup);
  std::vector<std::string> mod_names;
  for (ModKind m : mods) mod_names.emplace_back(mod_name(m));
  update_manifest(opt, index, algo_names(algos), mod_names);
  const HashStore store = load_store(opt);

  for (ModKind kind : mods) {
    try {
      const auto results = run_intra(store, index, mod_name(kind), algo_names(algos));
      write_experiment_outputs(opt, std::string("intra_") + mod_name(kind), mod_name(kind),
                               results);
      for (const auto& r : results) {
        const auto s = r.distances.stats();
        std::cout << "intra " << mod_name(kind) << ' ' << r.algo << ": n=" << s.n
                  << " mean=" << format_fixed(s.mean)
                  << " exact=" << format_fixed(s.exact_match_frac * 100.0) << "%\n";
      }
    } catch (const MissingHashes& e) {
      throw MissingHashes(std::string(e.what()) + " (run `pixhash modify` first)");
    }
  }
  return kExitOk;
}

LatticeAccumulator accumulator_from_histogram(const HistogramSeries& h) {
  LatticeAccumulator acc(h.bits);
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    for (std::uint64_t c = 0; c < h.counts[i]; ++c) {
      acc.add_numer(h.k_min + static_cast<int>(i));
    }
  }
  return acc;
}

int cmd_report(const Options& opt) {
  const fs::path out(opt.out);
  const fs::path rdir = out / "report";

  // Collect existing experiment outputs.
  std::vector<std::string> inter_tags, intra_tags;
  for (const auto& e : fs::directory_iterator(out)) {
    const std::string name = e.path().filename().string();
    if (name.starts_with("inter_") && name.ends_with(".csv")) {
      inter_tags.push_back(name.substr(6, name.size() - 10));
    }
    if (name.starts_with("intra_") && name.ends_with(".csv")) {
      intra_tags.push_back(name.substr(6, name.size() - 10));
    }
  }
  std::sort(inter_tags.begin(), inter_tags.end());
  std::sort(intra_tags.begin(), intra_tags.end());
  if (inter_tags.empty() && intra_tags.empty()) {
    throw NothingToReport("no inter_*.csv or intra_*.csv under " + opt.out);
  }
  fs::create_directories(rdir);

  const RunManifest manifest = RunManifest::load(manifest_path(opt));
  const HashStore store = load_store(opt);

  // Equivalence classes over the original hashes, per algorithm.
  std::vector<std::pair<std::string, EquivalenceReport>> equiv;
  for (const auto& algo : store.algos_for_variant(kOriginalVariant)) {
    std::vector<std::pair<std::string, BitHash>> hashes;
    for (const auto& r : store.records()) {
      if (r.variant == kOriginalVariant && r.hash.name == algo) {
        hashes.emplace_back(r.image_id, r.hash);
      }
    }
    auto report = equivalence_classes(hashes);
    write_equivalence_csv(rdir / ("equiv_" + algo + ".csv"), report);
    equiv.emplace_back(algo, std::move(report));
  }

  // Threshold trade-off curves from stored histogram tallies.
  std::vector<std::string> rate_files;
  for (const auto& intra_tag : intra_tags) {
    const auto stats_rows = read_stats_csv(out / ("intra_" + intra_tag + ".csv"));
    for (const auto& row : stats_rows) {
      const fs::path inter_hist = out / ("hist_inter_original_" + row.algo + ".csv");
      const fs::path intra_hist = out / ("hist_intra_" + intra_tag + "_" + row.algo + ".csv");
      if (!fs::exists(inter_hist) || !fs::exists(intra_hist)) continue;
      const auto inter_acc = accumulator_from_histogram(read_histogram_csv(inter_hist));
      const auto intra_acc = accumulator_from_histogram(read_histogram_csv(intra_hist));
      const auto rates = threshold_rates(inter_acc, intra_acc);
      const std::string fname = "threshold_" + row.algo + "_" + intra_tag + ".csv";
      write_rates_csv(rdir / fname, rates);
      rate_files.push_back(fname);
    }
  }

  // Index page.
  std::ofstream html(rdir / "index.html", std::ios::trunc);
  html << "<!doctype html><html><head><meta charset=\"utf-8\"><title>pixhash report</title>"
       << "<style>body{font-family:sans-serif;margin:2em}table{border-collapse:collapse}"
       << "td,th{border:1px solid #999;padding:4px 8px}</style></head><body>\n";
  html << "<h1>pixhash run report</h1>\n";

  html << "<h2>Experiments</h2>\n<ul>\n";
  for (const auto& t : inter_tags) {
    html << "<li>inter " << t << " — <a href=\"../inter_" << t << ".csv\">stats</a></li>\n";
  }
  for (const auto& t : intra_tags) {
    html << "<li>intra " << t << " — <a href=\"../intra_" << t << ".csv\">stats</a></li>\n";
  }
  html << "</ul>\n";

  html << "<h2>Distance tables</h2>\n";
  for (const auto& t : inter_tags) {
    html << "<h3>inter " << t << "</h3>\n<table><tr><th>algo</th><th>n</th><th>mean</th>"
         << "<th>median</th><th>stdev</th><th>range</th><th>% exact matches</th></tr>\n";
    for (const auto& row : read_stats_csv(out / ("inter_" + t + ".csv"))) {
      html << "<tr><td>" << row.algo << "</td><td>" << row.stats.n << "</td><td>"
           << format_fixed(row.stats.mean) << "</td><td>" << format_fixed(row.stats.median)
           << "</td><td>" << format_fixed(row.stats.stdev) << "</td><td>"
           << format_fixed(row.stats.min) << "&ndash;" << format_fixed(row.stats.max)
           << "</td><td>" << format_fixed(row.stats.exact_match_frac * 100) << "</td></tr>\n";
    }
    html << "</table>\n";
  }
  for (const auto& t : intra_tags) {
    html << "<h3>intra " << t << "</h3>\n<table><tr><th>algo</th><th>n</th><th>mean</th>"
         << "<th>median</th><th>stdev</th><th>range</th><th>% exact matches</th></tr>\n";
    for (const auto& row : read_stats_csv(out / ("intra_" + t + ".csv"))) {
      html << "<tr><td>" << row.algo << "</td><td>" << row.stats.n << "</td><td>"
           << format_fixed(row.stats.mean) << "</td><td>" << format_fixed(row.stats.median)
           << "</td><td>" << format_fixed(row.stats.stdev) << "</td><td>"
           << format_fixed(row.stats.min) << "&ndash;" << format_fixed(row.stats.max)
           << "</td><td>" << format_fixed(row.stats.exact_match_frac * 100) << "</td></tr>\n";
    }
    html << "</table>\n";
  }

  html << "<h2>Equivalence classes (originals)</h2>\n";
  for (const auto& [algo, report] : equiv) {
    html << "<h3>" << algo << "</h3>\n";
    const auto flag_threshold = static_cast<std::size_t>(report.total / 1000);  // 0.1%
    html << "<p>" << report.classes.size() << " classes over " << report.total << " images; "
         << report.count_over(std::max<std::size_t>(flag_threshold, 1))
         << " classes above 0.1% of the corpus"
         << "</p>\n<table><tr><th>rank</th><th>size</th><th>flagged</th><th>members</th></tr>\n";
    for (std::size_t i = 0; i < std::min<std::size_t>(report.classes.size(), 10); ++i) {
      const auto& c = report.classes[i];
      const bool flagged = c.size * 1000 > report.total && c.size > 1;
      html << "<tr><td>" << (i + 1) << "</td><td>" << c.size << "</td><td>"
           << (flagged ? "FLAG" : "") << "</td><td>";
      for (std::size_t j = 0; j < c.sample_ids.size(); ++j) {
        if (j) html << ", ";
        html << c.sample_ids[j];
      }
      if (c.sample_ids.size() < c.size) html << ", &hellip;";
      html << "</td></tr>\n";
    }
    html << "</table>\n";
  }

  html << "<h2>Threshold trade-offs</h2>\n<ul>\n";
  for (const auto& f : rate_files) {
    html << "<li><a href=\"" << f << "\">" << f << "</a></li>\n";
  }
  html << "</ul>\n";

  std::ifstream mf(manifest_path(opt));
  html << "<h2>Manifest</h2>\n<pre>";
  html << std::string((std::istreambuf_iterator<char>(mf)), std::istreambuf_iterator<char>());
  html << "</pre>\n</body></html>\n";

  std::cout << "report written to " << (rdir / "index.html").string() << '\n';
  return kExitOk;
}

int cmd_golden(const std::string& fixtures, const std::string& goldens) {
  const GoldenOutcome outcome = check_goldens(fixtures, goldens);
  if (outcome.violations.empty()) {
    std::cout << "golden: " << outcome.checked << " vectors within tolerance\n";
    return kExitOk;
  }
  for (const auto& v : outcome.violations) {
    std::cout << "golden VIOLATION " << v.file << " " << v.algo << ": " << v.differing
              << " differing (band " << v.band << ")\n";
  }
  std::cout << "golden: " << outcome.violations.size() << " of " << outcome.checked
            << " vectors out of tolerance\n";
  return kExitAcceptance;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pixhash - perceptual image hashing and Hamming distance benchmark"};
  app.require_subcommand(1);

  Options opt;
  std::string variant = kOriginalVariant;
  bool save_variants = false;
  std::string fixtures, goldens;

  auto add_common = [&](CLI::App* sub, bool needs_corpus) {
    if (needs_corpus) {
      sub->add_option("--corpus", opt.corpus, "image corpus directory")->required();
      sub->add_flag("--dedup,!--no-dedup", opt.dedup, "collapse byte-identical files");
    }
    sub->add_option("--out", opt.out, "output directory");
    sub->add_option("--seed", opt.seed, "sampling seed");
    sub->add_option("--k", opt.k, "random partners per image")->check(CLI::PositiveNumber);
    sub->add_option("--algos", opt.algos, "comma-separated algorithm list");
    sub->add_option("--workers", opt.workers, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--kernel", opt.kernel, "resampling kernel for scale/thumb attacks");
    sub->add_option("--mirror-axis", opt.mirror_axis, "horizontal|vertical");
  };

  CLI::App* hash = app.add_subcommand("hash", "ingest a corpus and hash the originals");
  add_common(hash, true);

  CLI::App* modify = app.add_subcommand("modify", "apply modifications and hash the variants");
  add_common(modify, true);
  modify->add_option("--mods", opt.mods, "comma-separated modification list");
  modify->add_flag("--save-variants", save_variants, "persist modified images under out/variants");

  CLI::App* inter = app.add_subcommand("inter", "inter-score experiment (unrelated images)");
  add_common(inter, true);
  inter->add_option("--variant", variant, "original or a modification name");

  CLI::App* intra = app.add_subcommand("intra", "intra-score experiment (original vs modified)");
  add_common(intra, true);
  intra->add_option("--mods", opt.mods, "comma-separated modification list");

  CLI::App* report = app.add_subcommand("report", "consolidate experiment outputs");
  add_common(report, false);

  CLI::App* golden = app.add_subcommand("golden", "check fixture hashes against golden vectors");
  golden->add_option("--fixtures", fixtures, "fixture image directory")->required();
  golden->add_option("--goldens", goldens, "golden vector file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (hash->parsed()) return cmd_hash(opt);
    if (modify->parsed()) return cmd_modify(opt, save_variants);
    if (inter->parsed()) return cmd_inter(opt, variant);
    if (intra->parsed()) return cmd_intra(opt);
    if (report->parsed()) return cmd_report(opt);
    if (golden->parsed()) return cmd_golden(fixtures, goldens);
  } catch (const Error& e) {
    std::cerr << "pixhash: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "pixhash: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
