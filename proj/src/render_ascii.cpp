#include "pdsaw/render_ascii.hpp"

#include <algorithm>
#include <map>

namespace pdsaw {

namespace {

// Character grid indexed by (row band, column). Rows are horizontal bands
// [y, y+1) of the plane, columns are unit intervals of x. put() ignores
// writes into occupied cells so draw order sets precedence.
class Canvas {
 public:
  void put(int row, int col, char c, bool overwrite = false) {
    char& cell = cells_[{row, col}];
    if (cell == 0 || overwrite) cell = c;
  }

  std::string str() const {
    if (cells_.empty()) return "";
    int min_row = cells_.begin()->first.first;
    int max_row = cells_.rbegin()->first.first;
    int min_col = 0, max_col = 0;
    bool first = true;
    for (const auto& [key, c] : cells_) {
      if (first || key.second < min_col) min_col = key.second;
      if (first || key.second > max_col) max_col = key.second;
      first = false;
    }
    std::string out;
    for (int r = min_row; r <= max_row; ++r) {
      std::string line;
      for (int c = min_col; c <= max_col; ++c) {
        auto it = cells_.find({r, c});
        line += it == cells_.end() || it->second == 0 ? ' ' : it->second;
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      if (r > min_row) out += '\n';
      out += line;
    }
    return out;
  }

 private:
  std::map<std::pair<int, int>, char> cells_;  // ordered so rows print in order
};

int band_row(int y, int top) { return top - y; }  // higher y = smaller row index

std::string render_walk(const std::vector<int>& ys) {
  if (ys.empty()) return "";
  int top = *std::max_element(ys.begin(), ys.end());
  Canvas canvas;
  for (int i = 1; i <= static_cast<int>(ys.size()); ++i) {
    canvas.put(band_row(ys[i - 1], top), i, '_');
    if (i < static_cast<int>(ys.size())) {
      int from = ys[i - 1], to = ys[i];
      // north runs sit in the column of the next east step, south runs in
      // the column of the previous one; both label the lattice line x = i
      for (int y = std::min(from, to); y < std::max(from, to); ++y)
        canvas.put(band_row(y, top), to > from ? i + 1 : i, '|');
    }
  }
  return canvas.str();
}

void draw_weight_row(Canvas& canvas, int row, const std::vector<std::pair<int, int>>& weights) {
  int cursor = 0;
  for (const auto& [col, weight] : weights) {
    std::string digits = std::to_string(weight);
    int at = std::max(col, cursor);
    for (std::size_t k = 0; k < digits.size(); ++k)
      canvas.put(row, at + static_cast<int>(k), digits[k], true);
    cursor = at + static_cast<int>(digits.size()) + 1;
  }
}

// Greedy level assignment for arc diagrams: shorter arcs first, each taking
// the lowest level unused by any already-placed overlapping arc.
std::vector<int> arc_levels(const std::vector<std::pair<int, int>>& arcs) {
  std::vector<int> order(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int la = arcs[a].second - arcs[a].first, lb = arcs[b].second - arcs[b].first;
    return la != lb ? la < lb : arcs[a] < arcs[b];
  });
  std::vector<int> level(arcs.size(), 0);
  for (int idx : order) {
    int chosen = 1;
    bool moved = true;
    while (moved) {
      moved = false;
      for (std::size_t other = 0; other < arcs.size(); ++other) {
        if (level[other] != chosen) continue;
        bool overlap = arcs[idx].first < arcs[other].second && arcs[other].first < arcs[idx].second;
        if (overlap) {
          ++chosen;
          moved = true;
          break;
        }
      }
    }
    level[idx] = chosen;
  }
  return level;
}

// Draws arcs above (direction = -1) or below (direction = +1) the baseline
// row. Arc endpoints get '/' and '\', interiors '_', with '|' risers on
// taller arcs.
void draw_arcs(Canvas& canvas, int baseline, int direction,
               const std::vector<std::pair<int, int>>& arcs) {
  auto levels = arc_levels(arcs);
  for (int pass = 1; pass <= 2; ++pass) {
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      auto [p, q] = arcs[i];
      int row = baseline + direction * levels[i];
      if (pass == 1) {
        canvas.put(row, p, direction < 0 ? '/' : '\\');
        canvas.put(row, q, direction < 0 ? '\\' : '/');
        for (int c = p + 1; c < q; ++c) canvas.put(row, c, direction < 0 ? '_' : '-');
      } else {
        for (int l = 1; l < levels[i]; ++l) {
          canvas.put(baseline + direction * l, p, '|');
          canvas.put(baseline + direction * l, q, '|');
        }
      }
    }
  }
}

}  // namespace

std::string render_ascii(const SymPdsaw& walk) { return render_walk(walk.ys); }
std::string render_ascii(const AsymPdsaw& walk) { return render_walk(walk.ys); }

std::string render_ascii(const Matching& matching) {
  Canvas canvas;
  for (int p = 1; p <= matching.points(); ++p) canvas.put(0, p, '.');
  draw_arcs(canvas, 0, -1, matching.pair_list());
  return canvas.str();
}

std::string render_ascii(const Permutation& perm) {
  Canvas canvas;
  for (int p = 1; p <= perm.size(); ++p) canvas.put(0, p, '.');
  std::vector<std::pair<int, int>> upper, lower;
  for (int i = 1; i <= perm.size(); ++i) {
    int v = perm.image(i);
    if (v == i) canvas.put(-1, i, 'o');
    else if (v > i) upper.emplace_back(i, v);
    else lower.emplace_back(v, i);
  }
  draw_arcs(canvas, 0, -1, upper);
  draw_arcs(canvas, 0, +1, lower);
  return canvas.str();
}

std::string render_ascii(const WeightedDyckPath& path) {
  if (path.steps.empty()) return "";
  auto heights = step_heights(path);
  int top = *std::max_element(heights.begin(), heights.end());
  Canvas canvas;
  std::vector<std::pair<int, int>> weights;
  for (int p = 1; p <= static_cast<int>(path.steps.size()); ++p) {
    const auto& step = path.steps[p - 1];
    int h = heights[p - 1];
    if (step.dir == DyckDir::Rise) {
      canvas.put(band_row(h - 1, top), p, '/');
    } else {
      canvas.put(band_row(h, top), p, '\\');
      weights.emplace_back(p, step.weight);
    }
  }
  draw_weight_row(canvas, band_row(-1, top), weights);
  return canvas.str();
}

std::string render_ascii(const WeightedMotzkinPath& path) {
  if (path.steps.empty()) return "";
  auto heights = step_heights(path);
  int top = *std::max_element(heights.begin(), heights.end());
  Canvas canvas;
  std::vector<std::pair<int, int>> weights;
  for (int p = 1; p <= static_cast<int>(path.steps.size()); ++p) {
    const auto& step = path.steps[p - 1];
    int h = heights[p - 1];
    switch (step.kind) {
      case MotzkinKind::Rise: canvas.put(band_row(h - 1, top), p, '/'); break;
      case MotzkinKind::Fall: canvas.put(band_row(h, top), p, '\\'); break;
      case MotzkinKind::Level: canvas.put(band_row(h, top), p, '_'); break;
      case MotzkinKind::ColouredLevel: canvas.put(band_row(h, top), p, '='); break;
    }
    weights.emplace_back(p, step.weight);
  }
  draw_weight_row(canvas, band_row(-1, top), weights);
  return canvas.str();
}

std::string render_ascii(const Object& object) {
  return std::visit([](const auto& o) { return render_ascii(o); }, object);
}

}  // namespace pdsaw
