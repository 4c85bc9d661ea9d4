#include "relic/integral2d.hpp"

#include <stdexcept>
#include <string>

namespace relic::img {

namespace {

void check_image(const Image& img) {
  if (img.width < 0 || img.height < 0) {
    throw std::invalid_argument("image: negative dimensions");
  }
  if (img.pixels.size() !=
      static_cast<std::size_t>(img.width) * static_cast<std::size_t>(img.height)) {
    throw std::invalid_argument("image: pixel count does not match dimensions");
  }
}

void check_entry_index(int x, int y, int width, int height) {
  if (x < 0 || y < 0 || x > width || y > height) {
    throw std::out_of_range("summed-area table: entry (" + std::to_string(x) + ", " +
                            std::to_string(y) + ") outside [0," + std::to_string(width) +
                            "]x[0," + std::to_string(height) + "]");
  }
}

void check_rect(const Rect& r, int width, int height) {
  if (r.w < 1 || r.h < 1) {
    throw std::invalid_argument("box_sum: rectangle must be non-empty, got " +
                                std::to_string(r.w) + "x" + std::to_string(r.h));
  }
  if (r.x < 0 || r.y < 0 || r.x + r.w > width || r.y + r.h > height) {
    throw std::out_of_range("box_sum: rectangle (" + std::to_string(r.x) + ", " +
                            std::to_string(r.y) + ", " + std::to_string(r.w) + ", " +
                            std::to_string(r.h) + ") outside " + std::to_string(width) + "x" +
                            std::to_string(height) + " image");
  }
}

}  // namespace

Image::Image(int w, int h, long long fill)
    : width(w), height(h),
      pixels(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {
  if (w < 0 || h < 0) throw std::invalid_argument("image: negative dimensions");
}

// ---------------------------------------------------------------------------
// Eager table

SummedAreaTable::SummedAreaTable(const Image& img)
    : width_(img.width), height_(img.height),
      entries_(static_cast<std::size_t>(img.width + 1) * (img.height + 1), 0) {
  check_image(img);
  const int stride = width_ + 1;
  for (int y = 1; y <= height_; ++y) {
    for (int x = 1; x <= width_; ++x) {
      entries_[static_cast<std::size_t>(y) * stride + x] =
          img.at(x - 1, y - 1) + entries_[static_cast<std::size_t>(y - 1) * stride + x] +
          entries_[static_cast<std::size_t>(y) * stride + x - 1] -
          entries_[static_cast<std::size_t>(y - 1) * stride + x - 1];
    }
  }
}

long long SummedAreaTable::entry(int x, int y) const {
  check_entry_index(x, y, width_, height_);
  return entries_[static_cast<std::size_t>(y) * (width_ + 1) + x];
}

long long SummedAreaTable::box_sum(const Rect& rect) const {
  check_rect(rect, width_, height_);
  return entry(rect.x + rect.w, rect.y + rect.h) - entry(rect.x, rect.y + rect.h) -
         entry(rect.x + rect.w, rect.y) + entry(rect.x, rect.y);
}

// ---------------------------------------------------------------------------
// Lazy table

LazySummedAreaTable::LazySummedAreaTable(Image img)
    : img_(std::move(img)),
      entries_(static_cast<std::size_t>(img_.width + 1) * (img_.height + 1), 0),
      row_fill_(static_cast<std::size_t>(img_.height) + 1, 0) {
  check_image(img_);
}

long long LazySummedAreaTable::stored(int x, int y) const {
  if (x == 0 || y == 0) return 0;
  return entries_[static_cast<std::size_t>(y) * (img_.width + 1) + x];
}

long long LazySummedAreaTable::entry(int x, int y) {
  check_entry_index(x, y, img_.width, img_.height);
  if (x == 0 || y == 0) return 0;
  const int stride = img_.width + 1;
  // Every interior entry in [1..x] x [1..y] is a (transitive) dependency of
  // (x, y). Fill the missing ones in raster order, each row resuming at its
  // high-water mark: since every query extends a prefix of rows out to the
  // same column, row extents never increase with depth, so an entry's three
  // neighbors are always in place by the time it is computed.
  for (int yy = 1; yy <= y; ++yy) {
    for (int xx = row_fill_[yy] + 1; xx <= x; ++xx) {
      entries_[static_cast<std::size_t>(yy) * stride + xx] =
          img_.at(xx - 1, yy - 1) + stored(xx, yy - 1) + stored(xx - 1, yy) -
          stored(xx - 1, yy - 1);
      ++touches_;
    }
    if (row_fill_[yy] < x) row_fill_[yy] = x;
  }
  return entries_[static_cast<std::size_t>(y) * stride + x];
}

long long LazySummedAreaTable::box_sum(const Rect& rect) {
  check_rect(rect, img_.width, img_.height);
  return entry(rect.x + rect.w, rect.y + rect.h) - entry(rect.x, rect.y + rect.h) -
         entry(rect.x + rect.w, rect.y) + entry(rect.x, rect.y);
}

// ---------------------------------------------------------------------------
// Haar-like features

namespace {

void check_feature(const HaarFeature& f) {
  switch (f.kind) {
    case HaarKind::two_rect_horizontal:
      if (f.rect.w % 2 != 0) {
        throw std::invalid_argument("haar: two_rect_horizontal needs even width");
      }
      break;
    case HaarKind::two_rect_vertical:
      if (f.rect.h % 2 != 0) {
        throw std::invalid_argument("haar: two_rect_vertical needs even height");
      }
      break;
    case HaarKind::three_rect_horizontal:
      if (f.rect.w % 3 != 0) {
        throw std::invalid_argument("haar: three_rect_horizontal needs width divisible by 3");
      }
      break;
  }
  if (f.rect.w < 1 || f.rect.h < 1) {
    throw std::invalid_argument("haar: feature rectangle must be non-empty");
  }
}

template <typename Table>
long long haar_value_impl(Table& sat, const HaarFeature& f) {
  check_feature(f);
  const Rect& r = f.rect;
  switch (f.kind) {
    case HaarKind::two_rect_horizontal: {
      const int half = r.w / 2;
      return sat.box_sum({r.x, r.y, half, r.h}) - sat.box_sum({r.x + half, r.y, half, r.h});
    }
    case HaarKind::two_rect_vertical: {
      const int half = r.h / 2;
      return sat.box_sum({r.x, r.y, r.w, half}) - sat.box_sum({r.x, r.y + half, r.w, half});
    }
    case HaarKind::three_rect_horizontal: {
      const int third = r.w / 3;
      return sat.box_sum({r.x, r.y, third, r.h}) +
             sat.box_sum({r.x + 2 * third, r.y, third, r.h}) -
             sat.box_sum({r.x + third, r.y, third, r.h});
    }
  }
  throw std::logic_error("haar: unknown feature kind");
}

}  // namespace

long long haar_value(const SummedAreaTable& sat, const HaarFeature& f) {
  return haar_value_impl(sat, f);
}

long long haar_value(LazySummedAreaTable& sat, const HaarFeature& f) {
  return haar_value_impl(sat, f);
}

}  // namespace relic::img
