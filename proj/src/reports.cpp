#include <cstdio>
#include <fstream>
#include <sstream>

#include "pixhash/reports.hpp"

namespace pixhash {

std::string format_fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

void write_stats_csv(const std::filesystem::path& path, const std::vector<StatsRow>& rows) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw UnreadablePath("cannot write " + path.string());
  out << "algo,modification,n,mean,median,stdev,min,max,exact_match_pct\n";
  for (const auto& r : rows) {
    out << r.algo << ',' << (r.modification.empty() ? "-" : r.modification) << ',' << r.stats.n
        << ',' << format_fixed(r.stats.mean) << ',' << format_fixed(r.stats.median) << ','
        << format_fixed(r.stats.stdev) << ',' << format_fixed(r.stats.min) << ','
        << format_fixed(r.stats.max) << ',' << format_fixed(r.stats.exact_match_frac * 100.0)
        << '\n';
  }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string f;
  while (std::getline(ss, f, ',')) fields.push_back(f);
  return fields;
}

}  // namespace

std::vector<StatsRow> read_stats_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UnreadablePath("cannot read " + path.string());
  std::string line;
  std::getline(in, line);  // header
  std::vector<StatsRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 9) throw FormatError(path.string() + ": expected 9 columns");
    StatsRow r;
    r.algo = f[0];
    r.modification = (f[1] == "-") ? "" : f[1];
    r.stats.n = std::stoull(f[2]);
    r.stats.mean = std::stod(f[3]);
    r.stats.median = std::stod(f[4]);
    r.stats.stdev = std::stod(f[5]);
    r.stats.min = std::stod(f[6]);
    r.stats.max = std::stod(f[7]);
    r.stats.exact_match_frac = std::stod(f[8]) / 100.0;
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_histogram_csv(const std::filesystem::path& path, const HistogramSeries& h) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw UnreadablePath("cannot write " + path.string());
  out << "k,distance,count,npdf\n";
  out << "#bits=" << h.bits << ",n=" << h.n << ",mean=" << format_fixed(h.mean)
      << ",stdev=" << format_fixed(h.stdev) << "\n";
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    out << (h.k_min + static_cast<int>(i)) << ',' << format_fixed(h.centre(i)) << ','
        << h.counts[i] << ',' << format_fixed(h.npdf[i]) << '\n';
  }
}

HistogramSeries read_histogram_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UnreadablePath("cannot read " + path.string());
  HistogramSeries h;
  std::string line;
  std::getline(in, line);  // header
  bool first_row = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::sscanf(line.c_str(), "#bits=%d,n=%llu,mean=%lf,stdev=%lf", &h.bits,
                  reinterpret_cast<unsigned long long*>(&h.n), &h.mean, &h.stdev);
      continue;
    }
    const auto f = split_csv_line(line);
    if (f.size() != 4) throw FormatError(path.string() + ": expected 4 columns");
    if (first_row) {
      h.k_min = std::stoi(f[0]);
      first_row = false;
    }
    h.counts.push_back(std::stoull(f[2]));
    h.npdf.push_back(std::stod(f[3]));
  }
  return h;
}

void write_histogram_svg(const std::filesystem::path& path, const HistogramSeries& h,
                         const std::string& title) {
  constexpr int kW = 720, kH = 420;
  constexpr int kL = 60, kR = 20, kT = 40, kB = 46;
  const int plot_w = kW - kL - kR;
  const int plot_h = kH - kT - kB;

  // Density scale so the bars and the normal curve share one y-axis.
  const double bin_width = 1.0 / h.bits;
  double y_max = 1e-12;
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    y_max = std::max(y_max, static_cast<double>(h.counts[i]) / (static_cast<double>(h.n) * bin_width));
    y_max = std::max(y_max, h.npdf[i]);
  }
  const double x_lo = (h.k_min - 0.5) / static_cast<double>(h.bits);
  const double x_hi = (h.k_min + static_cast<double>(h.counts.size()) - 0.5) / h.bits;

  auto px = [&](double x) { return kL + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  auto py = [&](double y) { return kT + plot_h - y / y_max * plot_h; };

  std::ofstream out(path, std::ios::trunc);
  if (!out) throw UnreadablePath("cannot write " + path.string());
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
      << "\" viewBox=\"0 0 " << kW << ' ' << kH << "\">\n";
  out << "<rect width=\"" << kW << "\" height=\"" << kH << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << kW / 2 << "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"15\">"
      << title << "</text>\n";

  // Bars.
  const double bar_px = std::max(1.0, static_cast<double>(plot_w) / h.counts.size() - 1.0);
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    if (h.counts[i] == 0) continue;
    const double density = static_cast<double>(h.counts[i]) / (static_cast<double>(h.n) * bin_width);
    const double cx = px(h.centre(i));
    const double top = py(density);
    out << "<rect x=\"" << format_fixed(cx - bar_px / 2) << "\" y=\"" << format_fixed(top)
        << "\" width=\"" << format_fixed(bar_px) << "\" height=\""
        << format_fixed(kT + plot_h - top) << "\" fill=\"#4878a8\"/>\n";
  }

  // Normal overlay.
  out << "<polyline fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < h.npdf.size(); ++i) {
    out << format_fixed(px(h.centre(i))) << ',' << format_fixed(py(h.npdf[i])) << ' ';
  }
  out << "\"/>\n";

  // Axes.
  out << "<line x1=\"" << kL << "\" y1=\"" << kT + plot_h << "\" x2=\"" << kL + plot_w
      << "\" y2=\"" << kT + plot_h << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << kL << "\" y1=\"" << kT << "\" x2=\"" << kL << "\" y2=\"" << kT + plot_h
      << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 10; ++i) {
    const double x = x_lo + (x_hi - x_lo) * i / 10.0;
    out << "<text x=\"" << format_fixed(px(x)) << "\" y=\"" << kT + plot_h + 18
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
        << format_fixed(x).substr(0, 6) << "</text>\n";
  }
  out << "<text x=\"" << kL - 8 << "\" y=\"" << kT + 4
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
      << format_fixed(y_max) << "</text>\n";
  out << "<text x=\"" << kW / 2 << "\" y=\"" << kH - 8
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">normalised "
         "Hamming distance</text>\n";
  out << "</svg>\n";
}

void write_rates_csv(const std::filesystem::path& path, const std::vector<RatePoint>& rates) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw UnreadablePath("cannot write " + path.string());
  out << "threshold,fpr,fnr\n";
  for (const auto& r : rates) {
    out << format_fixed(r.threshold) << ',' << format_fixed(r.fpr) << ',' << format_fixed(r.fnr)
        << '\n';
  }
}

void write_equivalence_csv(const std::filesystem::path& path, const EquivalenceReport& report) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw UnreadablePath("cannot write " + path.string());
  out << "rank,size,share,sample_ids\n";
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    const auto& c = report.classes[i];
    out << (i + 1) << ',' << c.size << ','
        << format_fixed(static_cast<double>(c.size) / static_cast<double>(report.total)) << ',';
    for (std::size_t j = 0; j < c.sample_ids.size(); ++j) {
      if (j) out << '|';
      out << c.sample_ids[j];
    }
    out << '\n';
  }
}

}  // namespace pixhash
