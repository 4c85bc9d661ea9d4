#include "relic/ccl.hpp"

#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

#include "relic/kanren.hpp"
#include "relic/loops.hpp"

namespace relic::ccl {

namespace {

void check_dims(int w, int h) {
  if (w < 1 || h < 1) throw std::invalid_argument("image dimensions must be positive");
}

}  // namespace

BinaryImage::BinaryImage(int w, int h) : width(w), height(h) {
  check_dims(w, h);
  bits.assign(static_cast<std::size_t>(w) * h, 0);
}

LabelGrid::LabelGrid(int w, int h) : width(w), height(h) {
  check_dims(w, h);
  labels.assign(static_cast<std::size_t>(w) * h, 0);
}

int LabelGrid::component_count() const {
  int best = 0;
  for (int l : labels)
    if (l > best) best = l;
  return best;
}

namespace {

using mk::Goal;
using mk::Term;

// Offsets to the neighbors that precede (x, y) in raster order.
std::vector<std::pair<int, int>> visited_offsets(Connectivity conn) {
  std::vector<std::pair<int, int>> off = {{-1, 0}, {0, -1}};  // W, N
  if (conn == Connectivity::eight) {
    off.push_back({-1, -1});  // NW
    off.push_back({1, -1});   // NE
  }
  return off;
}

}  // namespace

LabelGrid label_components_relational(const BinaryImage& img, Connectivity conn) {
  const int w = img.width;
  const int h = img.height;
  LabelGrid out(w, h);

  // Collect foreground pixels in raster order; each gets one logic variable.
  std::vector<int> var_index(static_cast<std::size_t>(w) * h, -1);
  std::vector<std::pair<int, int>> foreground;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      if (img.at(x, y)) {
        var_index[static_cast<std::size_t>(y) * w + x] = static_cast<int>(foreground.size());
        foreground.emplace_back(x, y);
      }
  if (foreground.empty()) return out;

  const auto offsets = visited_offsets(conn);
  const int nvars = static_cast<int>(foreground.size());

  auto outcome = mk::run_outcome(1, [&](Term q) {
    return mk::fresh(nvars, [&, q](const std::vector<Term>& pix) {
      // The loop body unifies pixel (x, y) with every already-visited
      // foreground neighbor. Background pixels contribute nothing. The whole
      // program is forced inside run_outcome, before this frame unwinds, so
      // the reference captures stay valid.
      auto body = [&, pix](const std::vector<int>& idx) -> Goal {
        const int y = idx[0];
        const int x = idx[1];
        const int me = var_index[static_cast<std::size_t>(y) * w + x];
        if (me < 0) return mk::succeed();
        std::vector<Goal> merges;
        for (auto [dx, dy] : offsets) {
          const int nx = x + dx;
          const int ny = y + dy;
          if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
          const int other = var_index[static_cast<std::size_t>(ny) * w + nx];
          if (other >= 0) merges.push_back(mk::eq(pix[me], pix[other]));
        }
        return mk::conj_all(std::move(merges));
      };
      return mk::conj(mk::builde_nest({h, w}, body), mk::eq(q, Term::list(pix)));
    });
  });
  if (outcome.answers.size() != 1)
    throw std::logic_error("component labeling produced no answer");

  // The answer is the foreground variable list; untouched classes reify as
  // _.0, _.1, ... in first-appearance order, so index + 1 is already the
  // canonical label.
  auto cells = outcome.answers[0].proper_list();
  if (!cells || static_cast<int>(cells->size()) != nvars)
    throw std::logic_error("component labeling produced a malformed answer");
  for (int i = 0; i < nvars; ++i) {
    auto k = mk::reified_index((*cells)[i]);
    if (!k) throw std::logic_error("component labeling left a pixel unlabeled");
    auto [x, y] = foreground[i];
    out.at(x, y) = *k + 1;
  }
  return canonicalize(out);
}

LabelGrid flood_fill_oracle(const BinaryImage& img, Connectivity conn) {
  const int w = img.width;
  const int h = img.height;
  LabelGrid out(w, h);

  std::vector<std::pair<int, int>> neighbors = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
  if (conn == Connectivity::eight) {
    neighbors.push_back({-1, -1});
    neighbors.push_back({1, -1});
    neighbors.push_back({-1, 1});
    neighbors.push_back({1, 1});
  }

  int next = 0;
  for (int sy = 0; sy < h; ++sy)
    for (int sx = 0; sx < w; ++sx) {
      if (!img.at(sx, sy) || out.at(sx, sy) != 0) continue;
      ++next;
      std::deque<std::pair<int, int>> queue = {{sx, sy}};
      out.at(sx, sy) = next;
      while (!queue.empty()) {
        auto [x, y] = queue.front();
        queue.pop_front();
        for (auto [dx, dy] : neighbors) {
          const int nx = x + dx;
          const int ny = y + dy;
          if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
          if (!img.at(nx, ny) || out.at(nx, ny) != 0) continue;
          out.at(nx, ny) = next;
          queue.push_back({nx, ny});
        }
      }
    }
  return out;
}

LabelGrid canonicalize(const LabelGrid& grid) {
  LabelGrid out(grid.width, grid.height);
  std::map<int, int> rename;
  for (std::size_t i = 0; i < grid.labels.size(); ++i) {
    const int l = grid.labels[i];
    if (l == 0) continue;
    auto [it, fresh] = rename.try_emplace(l, static_cast<int>(rename.size()) + 1);
    out.labels[i] = it->second;
    (void)fresh;
  }
  return out;
}

std::string format_grid(const LabelGrid& grid) {
  std::ostringstream os;
  for (int y = 0; y < grid.height; ++y) {
    for (int x = 0; x < grid.width; ++x) {
      if (x) os << ' ';
      os << grid.at(x, y);
    }
    os << '\n';
  }
  return os.str();
}

std::string format_nested_list(const LabelGrid& grid) {
  std::ostringstream os;
  os << '(';
  for (int y = 0; y < grid.height; ++y) {
    if (y) os << ' ';
    os << '(';
    for (int x = 0; x < grid.width; ++x) {
      if (x) os << ' ';
      os << grid.at(x, y);
    }
    os << ')';
  }
  os << ")\n";
  return os.str();
}

}  // namespace relic::ccl
