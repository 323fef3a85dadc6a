#pragma once

#include <cstdint>
#include <string>

#include "pdsaw/enumerate.hpp"
#include "pdsaw/qpoly.hpp"

namespace pdsaw {

// Touchard-Riordan formula: the generating polynomial of matchings of [2n]
// by nestings (equivalently crossings), evaluated exactly as an alternating
// binomial sum divided by (1-q)^n. The division must be exact; a remainder
// raises InexactDivisionError.
QPoly touchard_riordan(int n);

// Williams' formula: the generating polynomial of permutations of [n] by
// nestings, evaluated in Laurent arithmetic. All negative exponents must
// cancel; leftovers raise InternalError. Requires n >= 1.
QPoly williams(int n);

enum class MomentFamily { Hermite, Laguerre };

// Coefficient of x^n in the continued fraction expansion of the moment
// generating function of the family (q-Hermite: levels [h]_q x; q-Laguerre:
// levels 1 - ([h-1]_q + [h]_q) x with [h]_q^2 x^2 numerators). Truncated at
// depth n+1 and checked for stabilisation against depth n+2.
QPoly cf_moments(MomentFamily family, int n);

// Height-indexed dynamic program summing q^(total weight) over weighted
// Dyck paths with n falls (Hermite) or weighted bicoloured Motzkin paths
// with n steps (Laguerre).
QPoly transfer_distribution(MomentFamily family, int n);

// Brute force: sum of q^(stat(object)) over every object of the kind with
// size n. Subject to the enumeration cap.
QPoly statistic_distribution(Kind kind, const std::string& stat, int n,
                             std::uint64_t cap = kDefaultCap);

}  // namespace pdsaw
