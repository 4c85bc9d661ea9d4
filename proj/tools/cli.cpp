#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "relic/ccl.hpp"
#include "relic/integral2d.hpp"
#include "relic/pnm.hpp"
#include "relic/signal.hpp"

namespace relic::cli {

namespace {

img::Rect parse_rect(const std::string& text) {
  img::Rect r;
  char c1 = 0, c2 = 0, c3 = 0;
  std::istringstream in(text);
  if (!(in >> r.x >> c1 >> r.y >> c2 >> r.w >> c3 >> r.h) || c1 != ',' || c2 != ',' ||
      c3 != ',' || !(in >> std::ws).eof())
    throw std::invalid_argument("--rect expects x,y,w,h, got '" + text + "'");
  return r;
}

img::HaarKind parse_kind(const std::string& name) {
  if (name == "two-h") return img::HaarKind::two_rect_horizontal;
  if (name == "two-v") return img::HaarKind::two_rect_vertical;
  if (name == "three-h") return img::HaarKind::three_rect_horizontal;
  throw std::invalid_argument("unknown feature kind '" + name + "'");
}

std::vector<signal::Signal> load_signals(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  auto signals = signal::parse_signals(in);
  if (signals.empty()) throw std::runtime_error(path + " contains no signals");
  return signals;
}

int cmd_label(const std::string& path, int connectivity, const std::string& format,
              long long threshold, std::ostream& out) {
  const auto img = pnm::read_binary(path, threshold);
  const auto conn =
      connectivity == 8 ? ccl::Connectivity::eight : ccl::Connectivity::four;
  const auto grid = ccl::label_components_relational(img, conn);
  out << (format == "list" ? ccl::format_nested_list(grid) : ccl::format_grid(grid));
  return 0;
}

int cmd_movavg(const std::string& path, int window, const std::string& impl,
               std::ostream& out) {
  int rc = 0;
  for (const auto& v : load_signals(path)) {
    if (impl == "naive") {
      out << signal::format_signal(signal::moving_average_naive(v, window)) << '\n';
    } else if (impl == "stream") {
      out << signal::format_signal(signal::moving_average_stream(v, window)) << '\n';
    } else if (impl == "memo") {
      out << signal::format_signal(signal::moving_average_memo(v, window)) << '\n';
    } else if (impl == "relational") {
      out << signal::format_signal(signal::moving_average_relational(v, window).averages)
          << '\n';
    } else {  // all: one line per implementation plus an agreement verdict
      const auto naive = signal::moving_average_naive(v, window);
      const auto stream = signal::moving_average_stream(v, window);
      const auto memo = signal::moving_average_memo(v, window);
      const auto rel = signal::moving_average_relational(v, window);
      out << "naive: " << signal::format_signal(naive) << '\n';
      out << "stream: " << signal::format_signal(stream) << '\n';
      out << "memo: " << signal::format_signal(memo) << '\n';
      out << "relational: " << signal::format_signal(rel.averages) << '\n';
      if (naive == stream && naive == memo && naive == rel.averages) {
        out << "AGREE shortcut_hits=" << rel.stats.shortcut_hits
            << " direct_computations=" << rel.stats.direct_computations << '\n';
      } else {
        out << "DISAGREE\n";
        rc = 1;
      }
    }
  }
  return rc;
}

int cmd_boxsum(const std::string& path, const std::string& rect_text,
               const std::string& impl, std::ostream& out) {
  const auto image = pnm::read_image(path);
  const auto rect = parse_rect(rect_text);
  long long sum = 0;
  if (impl == "lazy") {
    img::LazySummedAreaTable table(image);
    sum = table.box_sum(rect);
  } else {
    sum = img::SummedAreaTable(image).box_sum(rect);
  }
  out << sum << '\n';
  return 0;
}

int cmd_haar(const std::string& path, const std::string& kind_name,
             const std::string& rect_text, std::ostream& out) {
  const auto image = pnm::read_image(path);
  const img::HaarFeature feature{parse_kind(kind_name), parse_rect(rect_text)};
  out << img::haar_value(img::SummedAreaTable(image), feature) << '\n';
  return 0;
}

// --------------------------------------------------------------------------
// bench: touch counts and wall times for the eager and lazy tables under a
// sparse clustered-query workload and a full scan. Output is CSV and, for a
// fixed seed, bit-identical across runs except the wall_time column.

struct BenchCase {
  std::string workload;
  std::string strategy;
  std::size_t entries_touched = 0;
  double wall_time = 0.0;
};

img::Image random_image(std::mt19937_64& rng, int side) {
  img::Image image(side, side);
  std::uniform_int_distribution<long long> pixel(0, 255);
  for (auto& p : image.pixels) p = pixel(rng);
  return image;
}

template <class Work>
double best_of(int reps, Work work) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < reps; ++i) {
    const auto start = std::chrono::steady_clock::now();
    work();
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    best = std::min(best, elapsed.count());
  }
  return best;
}

std::vector<BenchCase> bench_sparse(std::uint64_t seed, int reps) {
  std::mt19937_64 rng(seed);
  const auto image = random_image(rng, 256);

  // Ten 8x8 rects clustered in a 32x32 window near the origin; the lazy
  // table's work is bounded by the window's dependency rectangle, the point
  // of the sparse scenario.
  std::uniform_int_distribution<int> origin(0, 32);
  const int wx = origin(rng);
  const int wy = origin(rng);
  std::uniform_int_distribution<int> offset(0, 32 - 8);
  std::vector<img::Rect> rects;
  for (int i = 0; i < 10; ++i) rects.push_back({wx + offset(rng), wy + offset(rng), 8, 8});

  long long eager_sum = 0;
  const double eager_time = best_of(reps, [&] {
    img::SummedAreaTable table(image);
    eager_sum = 0;
    for (const auto& r : rects) eager_sum += table.box_sum(r);
  });

  long long lazy_sum = 0;
  std::size_t lazy_touched = 0;
  const double lazy_time = best_of(reps, [&] {
    img::LazySummedAreaTable table(image);
    lazy_sum = 0;
    for (const auto& r : rects) lazy_sum += table.box_sum(r);
    lazy_touched = table.touches();
  });

  if (eager_sum != lazy_sum) throw std::logic_error("sparse bench: table disagreement");
  return {{"sparse", "eager", img::SummedAreaTable(image).entry_count(), eager_time},
          {"sparse", "lazy", lazy_touched, lazy_time}};
}

std::vector<BenchCase> bench_full(std::uint64_t seed, int reps) {
  std::mt19937_64 rng(seed);
  const auto image = random_image(rng, 256);

  // Checksum every interior entry; on the lazy table this forces the whole
  // memo, so its touch count reaches the eager entry count exactly.
  long long eager_sum = 0;
  const double eager_time = best_of(reps, [&] {
    img::SummedAreaTable table(image);
    eager_sum = 0;
    for (int y = 1; y <= image.height; ++y)
      for (int x = 1; x <= image.width; ++x) eager_sum += table.entry(x, y);
  });

  long long lazy_sum = 0;
  std::size_t lazy_touched = 0;
  const double lazy_time = best_of(reps, [&] {
    img::LazySummedAreaTable table(image);
    lazy_sum = 0;
    for (int y = 1; y <= image.height; ++y)
      for (int x = 1; x <= image.width; ++x) lazy_sum += table.entry(x, y);
    lazy_touched = table.touches();
  });

  if (eager_sum != lazy_sum) throw std::logic_error("full bench: table disagreement");
  return {{"full", "eager", img::SummedAreaTable(image).entry_count(), eager_time},
          {"full", "lazy", lazy_touched, lazy_time}};
}

int cmd_bench(const std::string& scenario, std::uint64_t seed, int reps,
              std::ostream& out) {
  const auto rows = scenario == "sparse" ? bench_sparse(seed, reps) : bench_full(seed, reps);
  out << "workload,strategy,entries_touched,wall_time\n";
  for (const auto& row : rows) {
    std::ostringstream line;  // keep stream formatting state local
    line << row.workload << ',' << row.strategy << ',' << row.entries_touched << ','
         << std::fixed << std::setprecision(9) << row.wall_time;
    out << line.str() << '\n';
  }
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"relational image and signal processing demos", "relic"};
  app.require_subcommand(1);

  std::string in_path;
  std::string format = "grid";
  std::string movavg_impl = "naive";
  std::string boxsum_impl = "eager";
  std::string rect_text;
  std::string kind_name;
  std::string scenario;
  int connectivity = 4;
  int window = 0;
  int reps = 3;
  long long threshold = 0;
  std::uint64_t seed = 42;

  auto* label = app.add_subcommand("label", "connected-component labeling of a bitmap");
  label->add_option("--in", in_path, "PBM/PGM input image")->required();
  label->add_option("--connectivity", connectivity, "4 or 8")
      ->check(CLI::IsMember({4, 8}));
  label->add_option("--format", format, "grid or list")
      ->check(CLI::IsMember({"grid", "list"}));
  label->add_option("--threshold", threshold, "grayscale foreground threshold");

  auto* movavg = app.add_subcommand("movavg", "moving average of exact signals");
  movavg->add_option("--in", in_path, "signal file, one signal per line")->required();
  movavg->add_option("--window", window, "window length")
      ->required()
      ->check(CLI::Range(1, std::numeric_limits<int>::max()));
  movavg->add_option("--impl", movavg_impl, "implementation to run")
      ->check(CLI::IsMember({"naive", "stream", "memo", "relational", "all"}));

  auto* boxsum = app.add_subcommand("boxsum", "rectangle pixel sum via a summed-area table");
  boxsum->add_option("--in", in_path, "PGM/PBM input image")->required();
  boxsum->add_option("--rect", rect_text, "x,y,w,h")->required();
  boxsum->add_option("--impl", boxsum_impl, "table implementation")
      ->check(CLI::IsMember({"eager", "lazy"}));

  auto* haar = app.add_subcommand("haar", "Haar-like rectangle feature value");
  haar->add_option("--in", in_path, "PGM/PBM input image")->required();
  haar->add_option("--kind", kind_name, "two-h, two-v or three-h")
      ->required()
      ->check(CLI::IsMember({"two-h", "two-v", "three-h"}));
  haar->add_option("--rect", rect_text, "x,y,w,h bounding rectangle")->required();

  auto* bench = app.add_subcommand("bench", "touch-count and timing comparison (CSV)");
  bench->add_option("--scenario", scenario, "sparse or full")
      ->required()
      ->check(CLI::IsMember({"sparse", "full"}));
  bench->add_option("--seed", seed, "random seed");
  bench->add_option("--reps", reps, "timing repetitions, best-of")
      ->check(CLI::Range(1, std::numeric_limits<int>::max()));

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (label->parsed()) return cmd_label(in_path, connectivity, format, threshold, out);
    if (movavg->parsed()) return cmd_movavg(in_path, window, movavg_impl, out);
    if (boxsum->parsed()) return cmd_boxsum(in_path, rect_text, boxsum_impl, out);
    if (haar->parsed()) return cmd_haar(in_path, kind_name, rect_text, out);
    if (bench->parsed()) return cmd_bench(scenario, seed, reps, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace relic::cli
