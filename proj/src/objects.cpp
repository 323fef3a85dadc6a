#include "pdsaw/objects.hpp"

#include <algorithm>

namespace pdsaw {

std::string kind_name(Kind kind) {
  switch (kind) {
    case Kind::SymPdsaw: return "sym-pdsaw";
    case Kind::AsymPdsaw: return "asym-pdsaw";
    case Kind::Matching: return "matching";
    case Kind::Permutation: return "permutation";
    case Kind::WeightedDyck: return "weighted-dyck";
    case Kind::WeightedMotzkin: return "weighted-motzkin";
  }
  throw InternalError("unhandled kind");
}

Kind kind_from_name(const std::string& name) {
  for (Kind kind : all_kinds())
    if (kind_name(kind) == name) return kind;
  throw ParseError("unknown kind '" + name + "'", 0);
}

const std::vector<Kind>& all_kinds() {
  static const std::vector<Kind> kinds = {
      Kind::SymPdsaw,    Kind::AsymPdsaw,    Kind::Matching,
      Kind::Permutation, Kind::WeightedDyck, Kind::WeightedMotzkin,
  };
  return kinds;
}

std::vector<std::pair<int, int>> Matching::pair_list() const {
  std::vector<std::pair<int, int>> pairs;
  for (int p = 0; p < points(); ++p) {
    if (partner[p] > p) pairs.emplace_back(p + 1, partner[p] + 1);
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

std::vector<int> Permutation::inverse_images() const {
  std::vector<int> inv(images.size(), 0);
  for (int i = 0; i < size(); ++i) {
    int v = images[i];
    if (v >= 1 && v <= size()) inv[v - 1] = i + 1;
  }
  return inv;
}

int WeightedDyckPath::falls() const {
  int count = 0;
  for (const auto& step : steps)
    if (step.dir == DyckDir::Fall) ++count;
  return count;
}

std::vector<int> step_heights(const WeightedDyckPath& path) {
  std::vector<int> heights;
  heights.reserve(path.steps.size());
  int h = 0;
  for (const auto& step : path.steps) {
    h += step.dir == DyckDir::Rise ? 1 : -1;
    heights.push_back(h);
  }
  return heights;
}

std::vector<int> step_heights(const WeightedMotzkinPath& path) {
  std::vector<int> heights;
  heights.reserve(path.steps.size());
  int h = 0;
  for (const auto& step : path.steps) {
    if (step.kind == MotzkinKind::Rise) ++h;
    if (step.kind == MotzkinKind::Fall) --h;
    heights.push_back(h);
  }
  return heights;
}

int dyck_fall_capacity(int height_after) { return height_after; }

int motzkin_capacity(MotzkinKind kind, int height_after) {
  switch (kind) {
    case MotzkinKind::Fall:
    case MotzkinKind::Level:
      return height_after;
    case MotzkinKind::Rise:
    case MotzkinKind::ColouredLevel:
      return height_after - 1;
  }
  throw InternalError("unhandled step kind");
}

namespace {

std::string at_index(const char* what, int i) {
  return std::string(what) + "[" + std::to_string(i) + "]";
}

void check_walk_common(const std::vector<int>& ys, std::vector<std::string>& out) {
  if (!ys.empty() && ys[0] != 0)
    out.push_back("ys[1] must be 0, got " + std::to_string(ys[0]));
}

}  // namespace

std::vector<std::string> violations(const SymPdsaw& walk) {
  std::vector<std::string> out;
  check_walk_common(walk.ys, out);
  for (int i = 1; i <= walk.east_steps(); ++i) {
    int y = walk.ys[i - 1];
    if (y < -(i - 1) || y > i - 1)
      out.push_back(at_index("ys", i) + "=" + std::to_string(y) + " outside [" +
                    std::to_string(-(i - 1)) + "," + std::to_string(i - 1) + "]");
  }
  return out;
}

std::vector<std::string> violations(const AsymPdsaw& walk) {
  std::vector<std::string> out;
  check_walk_common(walk.ys, out);
  for (int i = 1; i <= walk.east_steps(); ++i) {
    int y = walk.ys[i - 1];
    if (y < -(i - 1) || y > 0)
      out.push_back(at_index("ys", i) + "=" + std::to_string(y) + " outside [" +
                    std::to_string(-(i - 1)) + ",0]");
  }
  return out;
}

std::vector<std::string> violations(const Matching& matching) {
  std::vector<std::string> out;
  int n = matching.points();
  if (n % 2 != 0) out.push_back("odd number of points " + std::to_string(n));
  for (int p = 0; p < n; ++p) {
    int q = matching.partner[p];
    if (q < 0 || q >= n) {
      out.push_back("partner(" + std::to_string(p + 1) + ") out of range");
      continue;
    }
    if (q == p) out.push_back("partner(" + std::to_string(p + 1) + ") is a fixed point");
    else if (matching.partner[q] != p)
      out.push_back("partner map is not an involution at " + std::to_string(p + 1));
  }
  return out;
}

std::vector<std::string> violations(const Permutation& perm) {
  std::vector<std::string> out;
  int n = perm.size();
  std::vector<int> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    int v = perm.images[i];
    if (v < 1 || v > n) {
      out.push_back(at_index("images", i + 1) + "=" + std::to_string(v) + " outside [1," +
                    std::to_string(n) + "]");
      continue;
    }
    if (seen[v - 1]++)
      out.push_back("value " + std::to_string(v) + " appears more than once");
  }
  return out;
}

std::vector<std::string> violations(const WeightedDyckPath& path) {
  std::vector<std::string> out;
  auto heights = step_heights(path);
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    const auto& step = path.steps[i];
    int h = heights[i];
    if (h < 0) out.push_back("height " + std::to_string(h) + " below axis at step " +
                             std::to_string(i + 1));
    if (step.dir == DyckDir::Rise) {
      if (step.weight != 0)
        out.push_back("Rise weight " + std::to_string(step.weight) + " != 0 at step " +
                      std::to_string(i + 1));
    } else if (step.weight < 0 || (h >= 0 && step.weight > dyck_fall_capacity(h))) {
      out.push_back("Fall weight " + std::to_string(step.weight) + " > height " +
                    std::to_string(h) + " at step " + std::to_string(i + 1));
    }
  }
  if (!heights.empty() && heights.back() != 0)
    out.push_back("final height " + std::to_string(heights.back()) + " != 0");
  return out;
}

std::vector<std::string> violations(const WeightedMotzkinPath& path) {
  std::vector<std::string> out;
  auto heights = step_heights(path);
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    const auto& step = path.steps[i];
    int h = heights[i];
    if (h < 0) out.push_back("height " + std::to_string(h) + " below axis at step " +
                             std::to_string(i + 1));
    if (step.kind == MotzkinKind::ColouredLevel && h < 1) {
      out.push_back("ColouredLevel at height 0 at step " + std::to_string(i + 1));
      continue;
    }
    int cap = h >= 0 ? motzkin_capacity(step.kind, h) : 0;
    if (step.weight < 0 || (h >= 0 && step.weight > cap))
      out.push_back("weight " + std::to_string(step.weight) + " > capacity " +
                    std::to_string(cap) + " at step " + std::to_string(i + 1));
  }
  if (!heights.empty() && heights.back() != 0)
    out.push_back("final height " + std::to_string(heights.back()) + " != 0");
  return out;
}

Kind kind_of(const Object& object) {
  struct Visitor {
    Kind operator()(const SymPdsaw&) const { return Kind::SymPdsaw; }
    Kind operator()(const AsymPdsaw&) const { return Kind::AsymPdsaw; }
    Kind operator()(const Matching&) const { return Kind::Matching; }
    Kind operator()(const Permutation&) const { return Kind::Permutation; }
    Kind operator()(const WeightedDyckPath&) const { return Kind::WeightedDyck; }
    Kind operator()(const WeightedMotzkinPath&) const { return Kind::WeightedMotzkin; }
  };
  return std::visit(Visitor{}, object);
}

std::vector<std::string> violations(const Object& object) {
  return std::visit([](const auto& o) { return violations(o); }, object);
}

int object_size(const Object& object) {
  struct Visitor {
    int operator()(const SymPdsaw& w) const { return w.east_steps(); }
    int operator()(const AsymPdsaw& w) const { return w.east_steps(); }
    int operator()(const Matching& m) const { return m.pairs(); }
    int operator()(const Permutation& p) const { return p.size(); }
    int operator()(const WeightedDyckPath& p) const { return p.falls(); }
    int operator()(const WeightedMotzkinPath& p) const { return p.size(); }
  };
  return std::visit(Visitor{}, object);
}

}  // namespace pdsaw
