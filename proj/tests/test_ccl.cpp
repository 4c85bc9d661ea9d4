#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "relic/ccl.hpp"

using namespace relic;
using ccl::BinaryImage;
using ccl::Connectivity;
using ccl::LabelGrid;

namespace {

// Rows as strings of '.' (background) and '#' (foreground).
BinaryImage image_from(const std::vector<std::string>& rows) {
  BinaryImage img(static_cast<int>(rows[0].size()), static_cast<int>(rows.size()));
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x) img.set(x, y, rows[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] == '#');
  return img;
}

LabelGrid grid_from(const std::vector<std::vector<int>>& rows) {
  LabelGrid g(static_cast<int>(rows[0].size()), static_cast<int>(rows.size()));
  for (int y = 0; y < g.height; ++y)
    for (int x = 0; x < g.width; ++x) g.at(x, y) = rows[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
  return g;
}

BinaryImage random_image(std::mt19937_64& rng, int w, int h, double density) {
  BinaryImage img(w, h);
  std::bernoulli_distribution fg(density);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) img.set(x, y, fg(rng));
  return img;
}

}  // namespace

TEST_CASE("labeling trivial images") {
  // all background: everything stays 0
  const BinaryImage empty(4, 3);
  const LabelGrid none = ccl::label_components_relational(empty, Connectivity::four);
  CHECK(none.component_count() == 0);
  for (int v : none.labels) CHECK(v == 0);

  // one solid block: a single component labeled 1
  const BinaryImage solid = image_from({"###", "###"});
  const LabelGrid one = ccl::label_components_relational(solid, Connectivity::four);
  CHECK(one.component_count() == 1);
  for (int v : one.labels) CHECK(v == 1);

  // a single pixel
  const BinaryImage dot = image_from({"...", ".#.", "..."});
  const LabelGrid d = ccl::label_components_relational(dot, Connectivity::eight);
  CHECK(d.component_count() == 1);
  CHECK(d.at(1, 1) == 1);
}

TEST_CASE("dimension validation") {
  CHECK_THROWS_AS(BinaryImage(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(BinaryImage(4, -1), std::invalid_argument);
  CHECK_THROWS_AS(LabelGrid(0, 0), std::invalid_argument);
}

TEST_CASE("two blobs and a bridge") {
  // two components under 4-connectivity...
  const BinaryImage img = image_from({
      "##..",
      "##..",
      "..##",
  });
  const LabelGrid four = ccl::label_components_relational(img, Connectivity::four);
  CHECK(four.component_count() == 2);
  CHECK(four == grid_from({{1, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 2, 2}}));

  // ...that merge under 8-connectivity through the corner touch at (1,1)-(2,2)
  const LabelGrid eight = ccl::label_components_relational(img, Connectivity::eight);
  CHECK(eight.component_count() == 1);
  CHECK(eight == grid_from({{1, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}}));

  // an explicit bridge merges them under 4-connectivity too
  const BinaryImage bridged = image_from({
      "##..",
      "###.",
      "..##",
  });
  CHECK(ccl::label_components_relational(bridged, Connectivity::four).component_count() == 1);

  // pixels two columns apart share no corner, so 8-connectivity keeps them apart
  const BinaryImage gap = image_from({
      "#.",
      "..",
      ".#",
  });
  CHECK(ccl::label_components_relational(gap, Connectivity::eight).component_count() == 2);
}

TEST_CASE("checkerboard: the connectivity split case") {
  const BinaryImage board = image_from({
      "#.#.",
      ".#.#",
      "#.#.",
  });
  const LabelGrid four = ccl::label_components_relational(board, Connectivity::four);
  CHECK(four.component_count() == 6);  // every pixel isolated

  const LabelGrid eight = ccl::label_components_relational(board, Connectivity::eight);
  CHECK(eight.component_count() == 1);  // diagonals join everything
}

TEST_CASE("labels are canonical: first raster occurrence order") {
  const BinaryImage img = image_from({
      "..#",
      "#.#",
      "#..",
  });
  const LabelGrid got = ccl::label_components_relational(img, Connectivity::four);
  // the top-right pixel is seen first, so its component is 1
  CHECK(got == grid_from({{0, 0, 1}, {2, 0, 1}, {2, 0, 0}}));

  // labels are exactly 1..k with no gaps
  std::vector<bool> seen(static_cast<std::size_t>(got.component_count()) + 1, false);
  for (int v : got.labels) {
    REQUIRE(v >= 0);
    REQUIRE(v <= got.component_count());
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (std::size_t k = 1; k < seen.size(); ++k) CHECK(seen[k]);
}

TEST_CASE("canonicalize renumbers and is idempotent") {
  const LabelGrid scrambled = grid_from({{0, 7, 7}, {3, 0, 7}, {3, 0, 0}});
  const LabelGrid canon = ccl::canonicalize(scrambled);
  CHECK(canon == grid_from({{0, 1, 1}, {2, 0, 1}, {2, 0, 0}}));
  CHECK(ccl::canonicalize(canon) == canon);
  CHECK(canon.component_count() == 2);
}

TEST_CASE("relational labeling agrees with the flood-fill oracle") {
  std::mt19937_64 rng(20240816);
  for (int round = 0; round < 30; ++round) {
    std::uniform_real_distribution<double> dd(0.2, 0.8);
    const BinaryImage img = random_image(rng, 16, 16, dd(rng));
    for (Connectivity conn : {Connectivity::four, Connectivity::eight}) {
      const LabelGrid relational = ccl::label_components_relational(img, conn);
      const LabelGrid oracle = ccl::flood_fill_oracle(img, conn);
      REQUIRE(relational == oracle);
    }
    // merging diagonals can only reduce the component count
    CHECK(ccl::label_components_relational(img, Connectivity::eight).component_count() <=
          ccl::label_components_relational(img, Connectivity::four).component_count());
  }
}

TEST_CASE("foreground/background is preserved exactly") {
  std::mt19937_64 rng(20240815);
  const BinaryImage img = random_image(rng, 12, 9, 0.5);
  const LabelGrid got = ccl::label_components_relational(img, Connectivity::four);
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x) CHECK((got.at(x, y) > 0) == img.at(x, y));
}

TEST_CASE("grid formatting") {
  const LabelGrid g = grid_from({{0, 1}, {1, 0}});
  CHECK(ccl::format_grid(g) == "0 1\n1 0\n");
  CHECK(ccl::format_nested_list(g) == "((0 1) (1 0))\n");

  const LabelGrid wide = grid_from({{1, 0, 12}});
  CHECK(ccl::format_grid(wide) == "1 0 12\n");
  CHECK(ccl::format_nested_list(wide) == "((1 0 12))\n");

  // format_grid round-trips through a plain text parse
  std::istringstream in(ccl::format_grid(g));
  LabelGrid parsed(g.width, g.height);
  for (int y = 0; y < g.height; ++y)
    for (int x = 0; x < g.width; ++x) in >> parsed.at(x, y);
  CHECK(parsed == g);
}
