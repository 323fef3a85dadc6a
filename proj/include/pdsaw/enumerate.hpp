#pragma once

#include <cstdint>
#include <vector>

#include "pdsaw/bigint.hpp"
#include "pdsaw/objects.hpp"

namespace pdsaw {

inline constexpr std::uint64_t kDefaultCap = 100'000'000;

// Closed-form counts: (2n-1)!! for the symmetric family (walks, matchings,
// weighted Dyck paths), n! for the asymmetric family (walks, permutations,
// weighted Motzkin paths).
BigInt count(Kind kind, int n);

// Throws ResourceCapError when count(kind, n) exceeds `cap`.
void check_cap(Kind kind, int n, std::uint64_t cap);

// Typed exhaustive generators. Order is the generation order and is not part
// of the contract; enumerate_objects below is the ordered surface.
std::vector<SymPdsaw> enumerate_sym_pdsaws(int n, std::uint64_t cap = kDefaultCap);
std::vector<AsymPdsaw> enumerate_asym_pdsaws(int n, std::uint64_t cap = kDefaultCap);
std::vector<Matching> enumerate_matchings(int n, std::uint64_t cap = kDefaultCap);
std::vector<Permutation> enumerate_permutations(int n, std::uint64_t cap = kDefaultCap);
std::vector<WeightedDyckPath> enumerate_weighted_dyck(int n, std::uint64_t cap = kDefaultCap);
std::vector<WeightedMotzkinPath> enumerate_weighted_motzkin(int n, std::uint64_t cap = kDefaultCap);

// Every object of the kind with size n, exactly once, sorted by canonical
// text (byte-wise lexicographic).
std::vector<Object> enumerate_objects(Kind kind, int n, std::uint64_t cap = kDefaultCap);

// c[s] = number of partially directed self-avoiding walks in the symmetric
// wedge with exactly s steps in total and any endpoint, computed by dynamic
// programming over (x, y, last step direction).
std::vector<BigInt> count_free_sym_walks(int max_steps);

}  // namespace pdsaw
