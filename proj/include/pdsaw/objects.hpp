#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pdsaw/errors.hpp"

namespace pdsaw {

enum class Kind {
  SymPdsaw,
  AsymPdsaw,
  Matching,
  Permutation,
  WeightedDyck,
  WeightedMotzkin,
};

std::string kind_name(Kind kind);
Kind kind_from_name(const std::string& name);  // throws ParseError on unknown names
const std::vector<Kind>& all_kinds();

// Partially directed self-avoiding walk in the symmetric wedge |y| <= x,
// stored as the y-coordinates of its east steps (1-based in the math,
// 0-based in `ys`). The vertical runs between east steps and the final
// descent to (n, -n) are determined by these coordinates.
struct SymPdsaw {
  std::vector<int> ys;

  int east_steps() const { return static_cast<int>(ys.size()); }
  bool operator==(const SymPdsaw&) const = default;
};

// Same encoding for walks confined between the x-axis and y = -x.
struct AsymPdsaw {
  std::vector<int> ys;

  int east_steps() const { return static_cast<int>(ys.size()); }
  bool operator==(const AsymPdsaw&) const = default;
};

// Perfect matching of {1..2n}. partner[p] is the 0-based partner of point p.
struct Matching {
  std::vector<int> partner;

  int points() const { return static_cast<int>(partner.size()); }
  int pairs() const { return points() / 2; }
  // 1-based partner map, matching the on-disk encoding.
  int partner_of(int p) const { return partner.at(p - 1) + 1; }
  // Pairs (opener, closer), 1-based, opener < closer, sorted by opener.
  std::vector<std::pair<int, int>> pair_list() const;

  bool operator==(const Matching&) const = default;
};

// One-line permutation of {1..n}; images[i] = sigma(i+1) with values 1..n.
struct Permutation {
  std::vector<int> images;

  int size() const { return static_cast<int>(images.size()); }
  int image(int i) const { return images.at(i - 1); }  // sigma(i), 1-based
  std::vector<int> inverse_images() const;             // inverse one-line form

  bool operator==(const Permutation&) const = default;
};

enum class DyckDir { Rise, Fall };

struct DyckStep {
  DyckDir dir = DyckDir::Rise;
  int weight = 0;  // rises always carry weight 0
  bool operator==(const DyckStep&) const = default;
};

// Dyck path with a weight on every fall, bounded by the fall's ending height
// ("histoire de Hermite"). The size parameter is the number of falls.
struct WeightedDyckPath {
  std::vector<DyckStep> steps;

  int falls() const;
  bool operator==(const WeightedDyckPath&) const = default;
};

enum class MotzkinKind { Rise, Fall, Level, ColouredLevel };

struct MotzkinStep {
  MotzkinKind kind = MotzkinKind::Level;
  int weight = 0;
  bool operator==(const MotzkinStep&) const = default;
};

// Bicoloured Motzkin path with a weight on every step ("histoire de
// Laguerre"). Falls and levels may carry up to their height, rises and
// coloured levels strictly less than their height.
struct WeightedMotzkinPath {
  std::vector<MotzkinStep> steps;

  int size() const { return static_cast<int>(steps.size()); }
  bool operator==(const WeightedMotzkinPath&) const = default;
};

// Height of each step = y-coordinate of the point where it ends. No validity
// assumed; invalid paths may produce negative heights.
std::vector<int> step_heights(const WeightedDyckPath& path);
std::vector<int> step_heights(const WeightedMotzkinPath& path);

// Largest weight a step ending at `height_after` may carry.
int dyck_fall_capacity(int height_after);
int motzkin_capacity(MotzkinKind kind, int height_after);

std::vector<std::string> violations(const SymPdsaw& walk);
std::vector<std::string> violations(const AsymPdsaw& walk);
std::vector<std::string> violations(const Matching& matching);
std::vector<std::string> violations(const Permutation& perm);
std::vector<std::string> violations(const WeightedDyckPath& path);
std::vector<std::string> violations(const WeightedMotzkinPath& path);

template <typename T>
bool is_valid(const T& object) {
  return violations(object).empty();
}

template <typename T>
void require_valid(const T& object) {
  auto v = violations(object);
  if (!v.empty()) throw ValidationError(std::move(v));
}

using Object = std::variant<SymPdsaw, AsymPdsaw, Matching, Permutation,
                            WeightedDyckPath, WeightedMotzkinPath>;

Kind kind_of(const Object& object);
std::vector<std::string> violations(const Object& object);
// The size parameter of the object's kind (east steps, pairs, letters,
// falls, or steps).
int object_size(const Object& object);

}  // namespace pdsaw
