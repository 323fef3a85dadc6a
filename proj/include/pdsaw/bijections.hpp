#pragma once

#include <string>
#include <vector>

#include "pdsaw/objects.hpp"

namespace pdsaw {

// One firing of a local transformation rule. `rule` is "I".."V" for the
// symmetric automaton and "i".."iv" for the asymmetric one; `at` is the
// position M of the first zero-weight closer when the rule fired. Within the
// raise sequence of one east step, `at` starts at 2 (symmetric) or 1
// (asymmetric) and increases by exactly one per application.
struct RuleApplication {
  std::string rule;
  int at = 0;
  bool operator==(const RuleApplication&) const = default;
};

struct RuleTrace {
  std::vector<RuleApplication> applied;
};

// Scan bijection between matchings and weighted Dyck paths: openers become
// rises; a closer paired with opener o becomes a fall whose weight counts
// the currently open openers below o.
WeightedDyckPath matching_to_dyck(const Matching& matching);
Matching dyck_to_matching(const WeightedDyckPath& path);

// Local-rule bijection between walks in the symmetric wedge and weighted
// Dyck paths. Total weight = north steps, complementary weight has the
// parity of the enclosed area, first zero fall sits at last descent + 1,
// and Dyck factor sizes are twice the reversed walk factor sizes.
WeightedDyckPath sym_pdsaw_to_dyck(const SymPdsaw& walk, RuleTrace* trace = nullptr);
SymPdsaw dyck_to_sym_pdsaw(const WeightedDyckPath& path);

// Step-typing bijection between permutations and weighted bicoloured
// Motzkin paths; the weight of step i counts the arcs nesting the arc that
// ends at i.
WeightedMotzkinPath perm_to_motzkin(const Permutation& perm);
Permutation motzkin_to_perm(const WeightedMotzkinPath& path);

// Local-rule bijection between walks below the x-axis and weighted
// bicoloured Motzkin paths.
WeightedMotzkinPath asym_pdsaw_to_motzkin(const AsymPdsaw& walk, RuleTrace* trace = nullptr);
AsymPdsaw motzkin_to_asym_pdsaw(const WeightedMotzkinPath& path);

// Rank-deletion bijection from walks below the x-axis to permutations;
// north steps become occurrences of the pattern 31-2.
Permutation nadeau(const AsymPdsaw& walk);
AsymPdsaw nadeau_inverse(const Permutation& perm);

// Check a trace against the rule automaton: group boundaries are the resets
// of `at`, each group must start in a legal start state, follow the automaton
// edges, and advance `at` by one per application.
bool trace_respects_sym_automaton(const RuleTrace& trace, std::string* why = nullptr);
bool trace_respects_asym_automaton(const RuleTrace& trace, std::string* why = nullptr);

}  // namespace pdsaw
