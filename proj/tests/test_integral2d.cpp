#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "relic/integral2d.hpp"

using namespace relic;
using img::Image;
using img::Rect;

namespace {

Image random_image(std::mt19937_64& rng, int w, int h, long long lo = -9, long long hi = 9) {
  Image out(w, h);
  std::uniform_int_distribution<long long> px(lo, hi);
  for (auto& p : out.pixels) p = px(rng);
  return out;
}

// O(w*h) reference sum, no tables involved.
long long brute_sum(const Image& im, const Rect& r) {
  long long total = 0;
  for (int y = r.y; y < r.y + r.h; ++y)
    for (int x = r.x; x < r.x + r.w; ++x) total += im.at(x, y);
  return total;
}

Rect random_rect(std::mt19937_64& rng, int w, int h) {
  std::uniform_int_distribution<int> xd(0, w - 1), yd(0, h - 1);
  const int x = xd(rng), y = yd(rng);
  std::uniform_int_distribution<int> wd(1, w - x), hd(1, h - y);
  return Rect{x, y, wd(rng), hd(rng)};
}

}  // namespace

TEST_CASE("eager table: entries are rectangle sums from the origin") {
  const Image one(1, 1, 42);
  img::SummedAreaTable t1(one);
  CHECK(t1.entry(0, 0) == 0);
  CHECK(t1.entry(1, 0) == 0);
  CHECK(t1.entry(0, 1) == 0);
  CHECK(t1.entry(1, 1) == 42);
  CHECK(t1.entry_count() == 1);

  const Image ones(3, 3, 1);
  img::SummedAreaTable t3(ones);
  CHECK(t3.entry(3, 3) == 9);
  CHECK(t3.entry(2, 2) == 4);
  CHECK(t3.entry(3, 1) == 3);

  std::mt19937_64 rng(555);
  const Image im = random_image(rng, 8, 5);
  img::SummedAreaTable t(im);
  for (int y = 0; y <= 5; ++y)
    for (int x = 0; x <= 8; ++x)
      CHECK(t.entry(x, y) == brute_sum(im, Rect{0, 0, x, y}));
}

TEST_CASE("eager box_sum matches brute force") {
  const Image ones(4, 4, 1);
  img::SummedAreaTable t(ones);
  CHECK(t.box_sum(Rect{0, 0, 4, 4}) == 16);
  CHECK(t.box_sum(Rect{1, 2, 2, 1}) == 2);
  CHECK(t.box_sum(Rect{3, 3, 1, 1}) == 1);

  std::mt19937_64 rng(556);
  const Image im = random_image(rng, 11, 7);
  img::SummedAreaTable tr(im);
  for (int round = 0; round < 100; ++round) {
    const Rect r = random_rect(rng, 11, 7);
    CHECK(tr.box_sum(r) == brute_sum(im, r));
  }
}

TEST_CASE("table and rectangle validation") {
  const Image im(3, 2, 1);
  img::SummedAreaTable t(im);
  CHECK_THROWS_AS(t.entry(4, 0), std::out_of_range);
  CHECK_THROWS_AS(t.entry(0, 3), std::out_of_range);
  CHECK_THROWS_AS(t.entry(-1, 0), std::out_of_range);
  CHECK_THROWS_AS(t.box_sum(Rect{0, 0, 4, 1}), std::out_of_range);
  CHECK_THROWS_AS(t.box_sum(Rect{2, 1, 2, 1}), std::out_of_range);
  CHECK_THROWS_AS(t.box_sum(Rect{-1, 0, 1, 1}), std::out_of_range);
  CHECK_THROWS_AS(t.box_sum(Rect{0, 0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(t.box_sum(Rect{0, 0, 1, 0}), std::invalid_argument);

  Image bad(3, 2, 0);
  bad.pixels.pop_back();
  CHECK_THROWS_AS(img::SummedAreaTable{bad}, std::invalid_argument);
  CHECK_THROWS_AS(img::LazySummedAreaTable{bad}, std::invalid_argument);

  img::LazySummedAreaTable lt(im);
  CHECK_THROWS_AS(lt.entry(4, 0), std::out_of_range);
  CHECK_THROWS_AS(lt.box_sum(Rect{0, 0, 0, 1}), std::invalid_argument);
}

TEST_CASE("lazy table: touch accounting") {
  std::mt19937_64 rng(557);
  const Image im = random_image(rng, 10, 8, 0, 9);

  img::LazySummedAreaTable lt(im);
  CHECK(lt.touches() == 0);

  // border entries are free
  CHECK(lt.entry(0, 0) == 0);
  CHECK(lt.entry(7, 0) == 0);
  CHECK(lt.entry(0, 5) == 0);
  CHECK(lt.touches() == 0);

  // the first interior query pays for exactly its dependency rectangle
  img::SummedAreaTable eager(im);
  CHECK(lt.entry(4, 3) == eager.entry(4, 3));
  CHECK(lt.touches() == 12);

  // asking again, or inside the filled region, is free
  CHECK(lt.entry(4, 3) == eager.entry(4, 3));
  CHECK(lt.entry(2, 2) == eager.entry(2, 2));
  CHECK(lt.touches() == 12);

  // a wider query pays only for the strip it adds
  CHECK(lt.entry(6, 2) == eager.entry(6, 2));
  CHECK(lt.touches() == 12 + 4);

  // box_sum agrees with the eager table and never exceeds the full budget
  for (int round = 0; round < 50; ++round) {
    const Rect r = random_rect(rng, 10, 8);
    CHECK(lt.box_sum(r) == eager.box_sum(r));
  }
  CHECK(lt.touches() <= 80);

  // a full scan ends with every interior entry computed exactly once
  img::LazySummedAreaTable full(im);
  long long checksum = 0;
  for (int y = 1; y <= 8; ++y)
    for (int x = 1; x <= 10; ++x) checksum += full.entry(x, y);
  long long eager_checksum = 0;
  for (int y = 1; y <= 8; ++y)
    for (int x = 1; x <= 10; ++x) eager_checksum += eager.entry(x, y);
  CHECK(checksum == eager_checksum);
  CHECK(full.touches() == 80);
}

TEST_CASE("lazy and eager tables agree on arbitrary query orders") {
  std::mt19937_64 rng(558);
  for (int round = 0; round < 10; ++round) {
    const Image im = random_image(rng, 9, 9);
    img::SummedAreaTable eager(im);
    img::LazySummedAreaTable lazy(im);
    std::uniform_int_distribution<int> coord(0, 9);
    for (int q = 0; q < 40; ++q) {
      const int x = coord(rng), y = coord(rng);
      CHECK(lazy.entry(x, y) == eager.entry(x, y));
      CHECK(lazy.touches() <= 81);
    }
  }
}

TEST_CASE("haar features: closed forms and brute force") {
  // uniform image: every balanced feature cancels to zero
  const Image flat(6, 6, 5);
  img::SummedAreaTable t(flat);
  CHECK(img::haar_value(t, {img::HaarKind::two_rect_horizontal, Rect{0, 0, 6, 6}}) == 0);
  CHECK(img::haar_value(t, {img::HaarKind::two_rect_vertical, Rect{1, 2, 4, 4}}) == 0);
  CHECK(img::haar_value(t, {img::HaarKind::three_rect_horizontal, Rect{0, 0, 6, 2}}) == 5 * 2 * 2);

  // 2x1 image [a b]: horizontal two-rect is a - b
  Image ab(2, 1);
  ab.at(0, 0) = 11;
  ab.at(1, 0) = 4;
  img::SummedAreaTable tab(ab);
  CHECK(img::haar_value(tab, {img::HaarKind::two_rect_horizontal, Rect{0, 0, 2, 1}}) == 7);

  // 1x2 image [a; b]: vertical two-rect is a - b
  Image av(1, 2);
  av.at(0, 0) = 3;
  av.at(0, 1) = 10;
  img::SummedAreaTable tav(av);
  CHECK(img::haar_value(tav, {img::HaarKind::two_rect_vertical, Rect{0, 0, 1, 2}}) == -7);

  std::mt19937_64 rng(559);
  const Image im = random_image(rng, 12, 10);
  img::SummedAreaTable tr(im);
  img::LazySummedAreaTable lz(im);
  for (int round = 0; round < 100; ++round) {
    Rect r = random_rect(rng, 12, 10);
    std::uniform_int_distribution<int> kd(0, 2);
    img::HaarKind kind;
    long long expect = 0;
    switch (kd(rng)) {
      case 0: {
        kind = img::HaarKind::two_rect_horizontal;
        r.w -= r.w % 2;
        if (r.w == 0) continue;
        const Rect left{r.x, r.y, r.w / 2, r.h};
        const Rect right{r.x + r.w / 2, r.y, r.w / 2, r.h};
        expect = brute_sum(im, left) - brute_sum(im, right);
        break;
      }
      case 1: {
        kind = img::HaarKind::two_rect_vertical;
        r.h -= r.h % 2;
        if (r.h == 0) continue;
        const Rect top{r.x, r.y, r.w, r.h / 2};
        const Rect bottom{r.x, r.y + r.h / 2, r.w, r.h / 2};
        expect = brute_sum(im, top) - brute_sum(im, bottom);
        break;
      }
      default: {
        kind = img::HaarKind::three_rect_horizontal;
        r.w -= r.w % 3;
        if (r.w == 0) continue;
        const int third = r.w / 3;
        const Rect a{r.x, r.y, third, r.h};
        const Rect b{r.x + third, r.y, third, r.h};
        const Rect c{r.x + 2 * third, r.y, third, r.h};
        expect = brute_sum(im, a) - brute_sum(im, b) + brute_sum(im, c);
        break;
      }
    }
    const img::HaarFeature f{kind, r};
    CHECK(img::haar_value(tr, f) == expect);
    CHECK(img::haar_value(lz, f) == expect);
  }
}

TEST_CASE("haar features: divisibility and scaling") {
  const Image im(6, 6, 2);
  img::SummedAreaTable t(im);
  CHECK_THROWS_AS(img::haar_value(t, {img::HaarKind::two_rect_horizontal, Rect{0, 0, 3, 2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(img::haar_value(t, {img::HaarKind::two_rect_vertical, Rect{0, 0, 2, 3}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(img::haar_value(t, {img::HaarKind::three_rect_horizontal, Rect{0, 0, 4, 2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(img::haar_value(t, {img::HaarKind::two_rect_horizontal, Rect{0, 0, 0, 2}}),
                  std::invalid_argument);

  // doubling every pixel doubles every feature value
  std::mt19937_64 rng(560);
  Image a = random_image(rng, 6, 4);
  Image b = a;
  for (auto& p : b.pixels) p *= 2;
  img::SummedAreaTable ta(a), tb(b);
  const img::HaarFeature f{img::HaarKind::two_rect_horizontal, Rect{1, 1, 4, 3}};
  CHECK(img::haar_value(tb, f) == 2 * img::haar_value(ta, f));
}
