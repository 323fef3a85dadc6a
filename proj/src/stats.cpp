#include "pdsaw/stats.hpp"

#include <algorithm>

namespace pdsaw {

namespace {

int north_steps_impl(const std::vector<int>& ys) {
  int north = 0;
  for (std::size_t i = 1; i < ys.size(); ++i) north += std::max(ys[i] - ys[i - 1], 0);
  return north;
}

int last_descent_impl(const std::vector<int>& ys) {
  if (ys.empty()) throw DomainError("last descent undefined for the empty walk");
  return ys.back() + static_cast<int>(ys.size());
}

}  // namespace

int north_steps(const SymPdsaw& walk) { return north_steps_impl(walk.ys); }
int north_steps(const AsymPdsaw& walk) { return north_steps_impl(walk.ys); }

int last_descent(const SymPdsaw& walk) { return last_descent_impl(walk.ys); }
int last_descent(const AsymPdsaw& walk) { return last_descent_impl(walk.ys); }

long long area_sym(const SymPdsaw& walk) {
  // Column i contributes the full squares between the east step at ys[i]
  // and the diagonal, which is ys[i] + i - 1 of them.
  long long area = 0;
  for (int i = 1; i <= walk.east_steps(); ++i) area += walk.ys[i - 1] + i - 1;
  return area;
}

long long nestings(const Matching& matching) {
  auto arcs = matching.pair_list();
  long long count = 0;
  for (std::size_t a = 0; a < arcs.size(); ++a)
    for (std::size_t b = 0; b < arcs.size(); ++b) {
      if (a == b) continue;
      // (i,j) nests (k,l): i < k < l < j
      if (arcs[a].first < arcs[b].first && arcs[b].second < arcs[a].second) ++count;
    }
  return count;
}

long long crossings(const Matching& matching) {
  auto arcs = matching.pair_list();
  long long count = 0;
  for (std::size_t a = 0; a < arcs.size(); ++a)
    for (std::size_t b = 0; b < arcs.size(); ++b) {
      if (a == b) continue;
      // (i,j) crosses (k,l): i < k < j < l
      if (arcs[a].first < arcs[b].first && arcs[b].first < arcs[a].second &&
          arcs[a].second < arcs[b].second)
        ++count;
    }
  return count;
}

long long nestings(const Permutation& perm) {
  int n = perm.size();
  long long count = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      int si = perm.image(i), sj = perm.image(j);
      if ((j < i && i <= si && si < sj) || (j > i && i > si && si > sj)) ++count;
    }
  return count;
}

long long crossings(const Permutation& perm) {
  int n = perm.size();
  long long count = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      int si = perm.image(i), sj = perm.image(j);
      // the middle inequality of the first clause is weak
      if ((i < j && j <= si && si < sj) || (sj < si && si < j && j < i)) ++count;
    }
  return count;
}

long long pattern_31_2(const Permutation& perm) {
  int n = perm.size();
  long long count = 0;
  for (int i = 1; i + 1 <= n; ++i)
    for (int k = i + 2; k <= n; ++k)
      if (perm.image(i + 1) < perm.image(k) && perm.image(k) < perm.image(i)) ++count;
  return count;
}

long long total_weight(const WeightedDyckPath& path) {
  long long sum = 0;
  for (const auto& step : path.steps) sum += step.weight;
  return sum;
}

long long total_weight(const WeightedMotzkinPath& path) {
  long long sum = 0;
  for (const auto& step : path.steps) sum += step.weight;
  return sum;
}

long long complementary_weight(const WeightedDyckPath& path) {
  auto heights = step_heights(path);
  long long sum = 0;
  for (std::size_t i = 0; i < path.steps.size(); ++i)
    if (path.steps[i].dir == DyckDir::Fall)
      sum += dyck_fall_capacity(heights[i]) - path.steps[i].weight;
  return sum;
}

long long complementary_weight(const WeightedMotzkinPath& path) {
  auto heights = step_heights(path);
  long long sum = 0;
  for (std::size_t i = 0; i < path.steps.size(); ++i)
    sum += motzkin_capacity(path.steps[i].kind, heights[i]) - path.steps[i].weight;
  return sum;
}

int first_zero_position(const WeightedDyckPath& path) {
  for (std::size_t i = 0; i < path.steps.size(); ++i)
    if (path.steps[i].dir == DyckDir::Fall && path.steps[i].weight == 0)
      return static_cast<int>(i) + 1;
  throw DomainError("no zero-weight closer");
}

int first_zero_position(const WeightedMotzkinPath& path) {
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    auto kind = path.steps[i].kind;
    if ((kind == MotzkinKind::Fall || kind == MotzkinKind::Level) && path.steps[i].weight == 0)
      return static_cast<int>(i) + 1;
  }
  throw DomainError("no zero-weight closer");
}

std::vector<int> factor_sizes(const SymPdsaw& walk) {
  // b is a factor boundary iff every later east step stays strictly below
  // the shifted diagonal: ys[i] < i - 2b for all i > b.
  int n = walk.east_steps();
  std::vector<int> boundaries{0};
  for (int b = 1; b <= n; ++b) {
    bool boundary = true;
    for (int i = b + 1; i <= n && boundary; ++i)
      if (walk.ys[i - 1] >= i - 2 * b) boundary = false;
    if (boundary) boundaries.push_back(b);
  }
  std::vector<int> sizes;
  for (std::size_t k = 1; k < boundaries.size(); ++k)
    sizes.push_back(boundaries[k] - boundaries[k - 1]);
  return sizes;
}

std::vector<int> factor_sizes(const AsymPdsaw& walk) {
  // b is a boundary iff the walk touches y = -b right after column b and
  // never rises above that line again.
  int n = walk.east_steps();
  std::vector<int> boundaries{0};
  for (int b = 1; b <= n; ++b) {
    bool boundary = b == n || walk.ys[b] == -b;
    for (int i = b + 1; i <= n && boundary; ++i)
      if (walk.ys[i - 1] > -b) boundary = false;
    if (boundary) boundaries.push_back(b);
  }
  std::vector<int> sizes;
  for (std::size_t k = 1; k < boundaries.size(); ++k)
    sizes.push_back(boundaries[k] - boundaries[k - 1]);
  return sizes;
}

std::vector<int> factor_sizes(const Matching& matching) {
  int points = matching.points();
  std::vector<int> sizes;
  int start = 0;
  int open = 0;
  for (int p = 0; p < points; ++p) {
    open += matching.partner[p] > p ? 1 : -1;
    if (open == 0) {
      sizes.push_back(p + 1 - start);
      start = p + 1;
    }
  }
  return sizes;
}

std::vector<int> factor_sizes(const Permutation& perm) {
  int n = perm.size();
  std::vector<int> sizes;
  int start = 0;
  int max_seen = 0;
  for (int i = 1; i <= n; ++i) {
    max_seen = std::max(max_seen, perm.image(i));
    if (max_seen == i) {
      sizes.push_back(i - start);
      start = i;
    }
  }
  return sizes;
}

namespace {

std::vector<int> factors_by_returns(const std::vector<int>& heights) {
  std::vector<int> sizes;
  int start = 0;
  for (std::size_t i = 0; i < heights.size(); ++i)
    if (heights[i] == 0) {
      sizes.push_back(static_cast<int>(i) + 1 - start);
      start = static_cast<int>(i) + 1;
    }
  return sizes;
}

}  // namespace

std::vector<int> factor_sizes(const WeightedDyckPath& path) {
  return factors_by_returns(step_heights(path));
}

std::vector<int> factor_sizes(const WeightedMotzkinPath& path) {
  return factors_by_returns(step_heights(path));
}

std::vector<int> factor_sizes(const Object& object) {
  return std::visit([](const auto& o) { return factor_sizes(o); }, object);
}

const std::vector<std::string>& statistic_names(Kind kind) {
  static const std::vector<std::string> sym = {"north", "last_descent", "area"};
  static const std::vector<std::string> asym = {"north", "last_descent"};
  static const std::vector<std::string> matching = {"nestings", "crossings"};
  static const std::vector<std::string> perm = {"nestings", "crossings", "pattern31_2"};
  static const std::vector<std::string> path = {"total_weight", "comp_weight", "first_zero"};
  switch (kind) {
    case Kind::SymPdsaw: return sym;
    case Kind::AsymPdsaw: return asym;
    case Kind::Matching: return matching;
    case Kind::Permutation: return perm;
    case Kind::WeightedDyck:
    case Kind::WeightedMotzkin: return path;
  }
  throw InternalError("unhandled kind");
}

long long statistic_value(const Object& object, const std::string& stat) {
  struct Visitor {
    const std::string& stat;

    long long operator()(const SymPdsaw& w) const {
      if (stat == "north") return north_steps(w);
      if (stat == "last_descent") return last_descent(w);
      if (stat == "area") return area_sym(w);
      throw Error("statistic '" + stat + "' not defined for sym-pdsaw");
    }
    long long operator()(const AsymPdsaw& w) const {
      if (stat == "north") return north_steps(w);
      if (stat == "last_descent") return last_descent(w);
      throw Error("statistic '" + stat + "' not defined for asym-pdsaw");
    }
    long long operator()(const Matching& m) const {
      if (stat == "nestings") return nestings(m);
      if (stat == "crossings") return crossings(m);
      throw Error("statistic '" + stat + "' not defined for matching");
    }
    long long operator()(const Permutation& p) const {
      if (stat == "nestings") return nestings(p);
      if (stat == "crossings") return crossings(p);
      if (stat == "pattern31_2") return pattern_31_2(p);
      throw Error("statistic '" + stat + "' not defined for permutation");
    }
    long long operator()(const WeightedDyckPath& p) const {
      if (stat == "total_weight") return total_weight(p);
      if (stat == "comp_weight") return complementary_weight(p);
      if (stat == "first_zero") return first_zero_position(p);
      throw Error("statistic '" + stat + "' not defined for weighted-dyck");
    }
    long long operator()(const WeightedMotzkinPath& p) const {
      if (stat == "total_weight") return total_weight(p);
      if (stat == "comp_weight") return complementary_weight(p);
      if (stat == "first_zero") return first_zero_position(p);
      throw Error("statistic '" + stat + "' not defined for weighted-motzkin");
    }
  };
  return std::visit(Visitor{stat}, object);
}

}  // namespace pdsaw
