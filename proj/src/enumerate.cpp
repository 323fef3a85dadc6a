#include "pdsaw/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "pdsaw/encode.hpp"

namespace pdsaw {

BigInt count(Kind kind, int n) {
  if (n < 0) throw DomainError("size must be non-negative");
  switch (kind) {
    case Kind::SymPdsaw:
    case Kind::Matching:
    case Kind::WeightedDyck:
      return double_factorial_odd(n);
    case Kind::AsymPdsaw:
    case Kind::Permutation:
    case Kind::WeightedMotzkin:
      return factorial(n);
  }
  throw InternalError("unhandled kind");
}

void check_cap(Kind kind, int n, std::uint64_t cap) {
  if (count(kind, n) > BigInt(cap))
    throw ResourceCapError("enumeration of " + kind_name(kind) + " at n=" + std::to_string(n) +
                           " exceeds the cap of " + std::to_string(cap) + " objects");
}

namespace {

// Walks are enumerated by choosing each east step height within its wedge
// band; every combination yields a valid walk.
template <typename Walk>
std::vector<Walk> enumerate_walks(int n, int lowest(int), int highest(int)) {
  std::vector<Walk> out;
  Walk current;
  current.ys.reserve(n);
  auto rec = [&](auto&& self, int i) -> void {
    if (i > n) {
      out.push_back(current);
      return;
    }
    for (int y = lowest(i); y <= highest(i); ++y) {
      current.ys.push_back(y);
      self(self, i + 1);
      current.ys.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace

std::vector<SymPdsaw> enumerate_sym_pdsaws(int n, std::uint64_t cap) {
  check_cap(Kind::SymPdsaw, n, cap);
  return enumerate_walks<SymPdsaw>(
      n, [](int i) { return -(i - 1); }, [](int i) { return i - 1; });
}

std::vector<AsymPdsaw> enumerate_asym_pdsaws(int n, std::uint64_t cap) {
  check_cap(Kind::AsymPdsaw, n, cap);
  return enumerate_walks<AsymPdsaw>(
      n, [](int i) { return -(i - 1); }, [](int) { return 0; });
}

std::vector<Matching> enumerate_matchings(int n, std::uint64_t cap) {
  check_cap(Kind::Matching, n, cap);
  std::vector<Matching> out;
  std::vector<int> partner(2 * n, -1);
  auto rec = [&](auto&& self) -> void {
    int p = 0;
    while (p < 2 * n && partner[p] != -1) ++p;
    if (p == 2 * n) {
      out.push_back(Matching{partner});
      return;
    }
    for (int q = p + 1; q < 2 * n; ++q) {
      if (partner[q] != -1) continue;
      partner[p] = q;
      partner[q] = p;
      self(self);
      partner[p] = -1;
      partner[q] = -1;
    }
  };
  rec(rec);
  return out;
}

std::vector<Permutation> enumerate_permutations(int n, std::uint64_t cap) {
  check_cap(Kind::Permutation, n, cap);
  std::vector<Permutation> out;
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  do {
    out.push_back(Permutation{images});
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<WeightedDyckPath> enumerate_weighted_dyck(int n, std::uint64_t cap) {
  check_cap(Kind::WeightedDyck, n, cap);
  std::vector<WeightedDyckPath> out;
  WeightedDyckPath current;
  current.steps.reserve(2 * n);
  auto rec = [&](auto&& self, int rises_used, int height) -> void {
    if (static_cast<int>(current.steps.size()) == 2 * n) {
      out.push_back(current);
      return;
    }
    if (rises_used < n) {
      current.steps.push_back({DyckDir::Rise, 0});
      self(self, rises_used + 1, height + 1);
      current.steps.pop_back();
    }
    if (height > 0) {
      for (int w = 0; w <= dyck_fall_capacity(height - 1); ++w) {
        current.steps.push_back({DyckDir::Fall, w});
        self(self, rises_used, height - 1);
        current.steps.pop_back();
      }
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<WeightedMotzkinPath> enumerate_weighted_motzkin(int n, std::uint64_t cap) {
  check_cap(Kind::WeightedMotzkin, n, cap);
  std::vector<WeightedMotzkinPath> out;
  WeightedMotzkinPath current;
  current.steps.reserve(n);
  auto rec = [&](auto&& self, int height) -> void {
    int remaining = n - static_cast<int>(current.steps.size());
    if (height > remaining) return;  // cannot descend back to the axis
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    auto push = [&](MotzkinKind kind, int new_height) {
      for (int w = 0; w <= motzkin_capacity(kind, new_height); ++w) {
        current.steps.push_back({kind, w});
        self(self, new_height);
        current.steps.pop_back();
      }
    };
    push(MotzkinKind::Rise, height + 1);
    if (height > 0) push(MotzkinKind::Fall, height - 1);
    push(MotzkinKind::Level, height);
    if (height > 0) push(MotzkinKind::ColouredLevel, height);
  };
  rec(rec, 0);
  return out;
}

std::vector<Object> enumerate_objects(Kind kind, int n, std::uint64_t cap) {
  std::vector<Object> objects;
  switch (kind) {
    case Kind::SymPdsaw:
      for (auto& o : enumerate_sym_pdsaws(n, cap)) objects.emplace_back(std::move(o));
      break;
    case Kind::AsymPdsaw:
      for (auto& o : enumerate_asym_pdsaws(n, cap)) objects.emplace_back(std::move(o));
      break;
    case Kind::Matching:
      for (auto& o : enumerate_matchings(n, cap)) objects.emplace_back(std::move(o));
      break;
    case Kind::Permutation:
      for (auto& o : enumerate_permutations(n, cap)) objects.emplace_back(std::move(o));
      break;
    case Kind::WeightedDyck:
      for (auto& o : enumerate_weighted_dyck(n, cap)) objects.emplace_back(std::move(o));
      break;
    case Kind::WeightedMotzkin:
      for (auto& o : enumerate_weighted_motzkin(n, cap)) objects.emplace_back(std::move(o));
      break;
  }
  std::sort(objects.begin(), objects.end(), [](const Object& a, const Object& b) {
    return render_text(a) < render_text(b);
  });
  return objects;
}

std::vector<BigInt> count_free_sym_walks(int max_steps) {
  if (max_steps < 0) throw DomainError("max_steps must be non-negative");
  // State (x, y, last) with x <= max_steps, |y| <= x, last in {E, N, S}.
  // The empty walk starts in (0, 0, E); E permits both verticals next.
  enum { E = 0, N = 1, S = 2 };
  int width = max_steps + 1;
  auto index = [&](int x, int y, int last) {
    return (x * (2 * max_steps + 1) + (y + max_steps)) * 3 + last;
  };
  std::vector<BigInt> state(width * (2 * max_steps + 1) * 3, 0);
  state[index(0, 0, E)] = 1;

  std::vector<BigInt> totals;
  totals.push_back(1);
  for (int s = 1; s <= max_steps; ++s) {
    std::vector<BigInt> next(state.size(), 0);
    BigInt total = 0;
    for (int x = 0; x < s; ++x) {
      for (int y = -x; y <= x; ++y) {
        for (int last = E; last <= S; ++last) {
          const BigInt& ways = state[index(x, y, last)];
          if (ways == 0) continue;
          next[index(x + 1, y, E)] += ways;
          if (last != S && y + 1 <= x) next[index(x, y + 1, N)] += ways;
          if (last != N && -(y - 1) <= x) next[index(x, y - 1, S)] += ways;
        }
      }
    }
    state.swap(next);
    for (const BigInt& ways : state) total += ways;
    totals.push_back(total);
  }
  return totals;
}

}  // namespace pdsaw
