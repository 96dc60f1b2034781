#pragma once

#include <vector>

#include "motivica/epoly.hpp"
#include "motivica/resolution.hpp"

namespace motivica {

// Age of the diagonal automorphism diag(zeta^a_1, ..., zeta^a_d) of order
// dividing m: the sum of the exponent representatives in [0, m), over m.
Rat age(const std::vector<long>& a, long m);

// All elements of the subgroup of (Z/m)^dim generated by the given vectors,
// in lexicographic order (the zero element always included).
std::vector<std::vector<long>> group_elements(const AbelianGroup& g);

// Orbifold weight W = sum over group elements of (uv)^{fix(g) + age(g)},
// where fix(g) counts the coordinates with a_j = 0.
EPoly orbifold_weight(const AbelianGroup& g);

// Comparison of the orbifold weight against the resolution-side stringy
// class; difference = orbifold side minus resolution side.
struct McKayReport {
  bool equal = false;
  EPoly difference;
};

McKayReport mckay_compare(const AbelianGroup& g, const Resolution& res);

}  // namespace motivica
