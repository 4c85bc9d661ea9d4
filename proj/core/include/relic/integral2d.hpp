#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

// Two-dimensional summed-area tables, eager and lazily memoized, plus
// Haar-like rectangle features evaluated through either table.
namespace relic::img {

struct Image {
  int width = 0;
  int height = 0;
  std::vector<long long> pixels;  // row-major, exact integers

  Image() = default;
  Image(int w, int h, long long fill = 0);

  long long at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
  long long& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
};

struct Rect {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;
};

// Eager table: (width+1) x (height+1) entries with a zero border, so
// entry(x, y) is the sum of all pixels in [0, x) x [0, y).
class SummedAreaTable {
public:
  explicit SummedAreaTable(const Image& img);

  long long entry(int x, int y) const;  // 0 <= x <= width, 0 <= y <= height
  int width() const { return width_; }
  int height() const { return height_; }
  // Interior entries the construction computed.
  std::size_t entry_count() const {
    return static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_);
  }

  // Exact pixel sum over rect; rejects out-of-bounds or empty rectangles.
  long long box_sum(const Rect& rect) const;

private:
  int width_ = 0;
  int height_ = 0;
  std::vector<long long> entries_;  // (width+1) * (height+1)
};

// Lazily memoized table over a backing image. Each interior entry is
// computed at most once, on demand, by filling the entry's dependency
// rectangle iteratively (no recursion depth to worry about on large
// coordinates); the touch counter reports how many entries were ever
// computed. Queries mutate the memo store, so concurrent use needs
// external serialization.
class LazySummedAreaTable {
public:
  explicit LazySummedAreaTable(Image img);

  long long entry(int x, int y);  // same index contract as the eager table
  long long box_sum(const Rect& rect);

  int width() const { return img_.width; }
  int height() const { return img_.height; }
  std::size_t touches() const { return touches_; }

private:
  long long stored(int x, int y) const;

  Image img_;
  std::vector<long long> entries_;
  // Rightmost computed column per row; the computed region is always a
  // staircase whose row extents never increase with depth.
  std::vector<int> row_fill_;
  std::size_t touches_ = 0;
};

enum class HaarKind {
  two_rect_horizontal,  // left half minus right half; width divisible by 2
  two_rect_vertical,    // top half minus bottom half; height divisible by 2
  three_rect_horizontal // outer thirds minus middle third; width divisible by 3
};

struct HaarFeature {
  HaarKind kind = HaarKind::two_rect_horizontal;
  Rect rect;
};

// Sum of the positive sub-rectangles minus the negative ones, in four table
// lookups per sub-rectangle. Works against either table flavor.
long long haar_value(const SummedAreaTable& sat, const HaarFeature& f);
long long haar_value(LazySummedAreaTable& sat, const HaarFeature& f);

}  // namespace relic::img
