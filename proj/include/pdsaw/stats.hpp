#pragma once

#include <string>
#include <vector>

#include "pdsaw/objects.hpp"

namespace pdsaw {

// Number of north steps of a walk: sum over i of max(ys[i+1] - ys[i], 0).
int north_steps(const SymPdsaw& walk);
int north_steps(const AsymPdsaw& walk);

// Number of south steps after the last east step: ys[n] + n.
// Throws DomainError for the empty walk.
int last_descent(const SymPdsaw& walk);
int last_descent(const AsymPdsaw& walk);

// Number of full unit squares enclosed between the walk and the line y = -x:
// sum over columns of (ys[i] + i - 1).
long long area_sym(const SymPdsaw& walk);

// Matchings: pairs {i,j}, {k,l} with i<k<l<j nest, with i<k<j<l cross.
long long nestings(const Matching& matching);
long long crossings(const Matching& matching);

// Permutations: arc (i, sigma(i)) is nested by (j, sigma(j)) when
// j<i<=sigma(i)<sigma(j) or j>i>sigma(i)>sigma(j); arcs cross when
// i<j<=sigma(i)<sigma(j) or sigma(j)<sigma(i)<j<i.
long long nestings(const Permutation& perm);
long long crossings(const Permutation& perm);

// Occurrences of the generalised pattern 31-2: index pairs (i, k) with
// i+1 < k and sigma(i+1) < sigma(k) < sigma(i).
long long pattern_31_2(const Permutation& perm);

// Sum of all step weights.
long long total_weight(const WeightedDyckPath& path);
long long total_weight(const WeightedMotzkinPath& path);

// Sum over steps of (capacity - weight); rises of Dyck paths contribute 0.
long long complementary_weight(const WeightedDyckPath& path);
long long complementary_weight(const WeightedMotzkinPath& path);

// 1-based position of the first fall (Dyck) or first fall-or-level (Motzkin)
// with weight zero. Throws DomainError when absent, which cannot happen for
// valid nonempty paths.
int first_zero_position(const WeightedDyckPath& path);
int first_zero_position(const WeightedMotzkinPath& path);

// Sizes of the prime (inclusion-minimal) factors, left to right. Walks are
// measured in east steps, matchings in points, permutations in letters,
// paths in steps.
std::vector<int> factor_sizes(const SymPdsaw& walk);
std::vector<int> factor_sizes(const AsymPdsaw& walk);
std::vector<int> factor_sizes(const Matching& matching);
std::vector<int> factor_sizes(const Permutation& perm);
std::vector<int> factor_sizes(const WeightedDyckPath& path);
std::vector<int> factor_sizes(const WeightedMotzkinPath& path);
std::vector<int> factor_sizes(const Object& object);

// Named statistics as exposed by stat reports and distributions.
// Throws Error for statistics not defined on the object's kind and
// DomainError when the statistic is undefined for the particular object.
const std::vector<std::string>& statistic_names(Kind kind);
long long statistic_value(const Object& object, const std::string& stat);

}  // namespace pdsaw
