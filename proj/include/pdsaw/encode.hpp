#pragma once

#include <string>

#include "pdsaw/objects.hpp"

namespace pdsaw {

// Canonical one-line text encodings:
//   sym:y1,y2,...         asym:y1,y2,...
//   match:p1-q1,p2-q2,... (pi < qi, pairs sorted by pi)
//   perm:s1 s2 ... sn
//   dyck:U D2 ...         (U = rise, D<w> = fall of weight w)
//   motzkin:U0 D1 F0 C2 ... (rise, fall, level, coloured level, each with weight)
// An empty body after the prefix denotes the size-0 object.

std::string render_text(const SymPdsaw& walk);
std::string render_text(const AsymPdsaw& walk);
std::string render_text(const Matching& matching);
std::string render_text(const Permutation& perm);
std::string render_text(const WeightedDyckPath& path);
std::string render_text(const WeightedMotzkinPath& path);
std::string render_text(const Object& object);

// All parsers validate the parsed object and throw ValidationError on
// invariant violations, ParseError on bad syntax.
SymPdsaw parse_sym_pdsaw(const std::string& line);
AsymPdsaw parse_asym_pdsaw(const std::string& line);
Matching parse_matching(const std::string& line);
Permutation parse_permutation(const std::string& line);
WeightedDyckPath parse_weighted_dyck(const std::string& line);
WeightedMotzkinPath parse_weighted_motzkin(const std::string& line);

// Dispatch on the "<prefix>:" in the line.
Object parse_object(const std::string& line);
Object parse_as(Kind kind, const std::string& line);

}  // namespace pdsaw
