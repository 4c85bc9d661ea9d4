#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Connected-component labeling, twice: a relational single pass where
// neighboring foreground pixels' label variables are unified (the
// substitution does the equivalence merging), and an independent flood-fill
// used as its oracle.
namespace relic::ccl {

struct BinaryImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> bits;  // row-major, 1 = foreground

  BinaryImage() = default;
  BinaryImage(int w, int h);

  bool at(int x, int y) const { return bits[static_cast<std::size_t>(y) * width + x] != 0; }
  void set(int x, int y, bool fg) {
    bits[static_cast<std::size_t>(y) * width + x] = fg ? 1 : 0;
  }
};

struct LabelGrid {
  int width = 0;
  int height = 0;
  std::vector<int> labels;  // row-major, 0 = background

  LabelGrid() = default;
  LabelGrid(int w, int h);

  int at(int x, int y) const { return labels[static_cast<std::size_t>(y) * width + x]; }
  int& at(int x, int y) { return labels[static_cast<std::size_t>(y) * width + x]; }
  int component_count() const;

  friend bool operator==(const LabelGrid& a, const LabelGrid& b) {
    return a.width == b.width && a.height == b.height && a.labels == b.labels;
  }
};

enum class Connectivity { four = 4, eight = 8 };

// One fresh variable per foreground pixel; a nested relational loop over the
// grid unifies each pixel's variable with its already-visited foreground
// neighbors (west/north, plus the diagonals under 8-connectivity). The
// reified variables name the equivalence classes; labels are canonical by
// construction (first raster occurrence order).
LabelGrid label_components_relational(const BinaryImage& img, Connectivity conn);

// BFS flood fill seeded in raster order, labels 1..k by seed order.
LabelGrid flood_fill_oracle(const BinaryImage& img, Connectivity conn);

// Relabels so the first raster occurrence of each component gets the next
// integer starting at 1. Idempotent; background stays 0.
LabelGrid canonicalize(const LabelGrid& grid);

// Space-separated labels, one row per line.
std::string format_grid(const LabelGrid& grid);
// Scheme-flavored nested list: ((0 1) (1 0)).
std::string format_nested_list(const LabelGrid& grid);

}  // namespace relic::ccl
