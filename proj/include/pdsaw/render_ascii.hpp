#pragma once

#include <string>

#include "pdsaw/objects.hpp"

namespace pdsaw {

// Deterministic ASCII pictures. Walks are drawn with '_' for east steps and
// '|' for the vertical runs between them (the forced final descent is
// omitted). Paths use '/', '\', '_' and '=' with the weights printed in a
// row beneath the steps. Matchings are arc diagrams over a row of dots;
// permutations get upper and lower arc rows with 'o' marking fixed points.
std::string render_ascii(const SymPdsaw& walk);
std::string render_ascii(const AsymPdsaw& walk);
std::string render_ascii(const Matching& matching);
std::string render_ascii(const Permutation& perm);
std::string render_ascii(const WeightedDyckPath& path);
std::string render_ascii(const WeightedMotzkinPath& path);
std::string render_ascii(const Object& object);

}  // namespace pdsaw
