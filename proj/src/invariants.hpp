#pragma once

#include "link.hpp"
#include "module.hpp"
#include "polynomial.hpp"
#include "quandle.hpp"

#include <vector>

namespace symq {

// Every assignment of target elements to generators satisfying all relations,
// each a 1-based vector indexed by generator, lexicographically sorted.
// Backtracks over generators in most-constrained-first order, forcing the
// third element of a relation as soon as two are known.
std::vector<std::vector<int>> enumerate_colorings(const Presentation& pres, const Quandle& target);

long long counting_invariant(const Presentation& pres, const Quandle& target);

// Sum over colorings of q^|Im f|. The image of a coloring is the subquandle
// its arc colors generate, not merely the set of arc colors.
Polynomial phi_e(const Presentation& pres, const Quandle& target);

// Colorings whose image is exactly the closed subset `s`.
long long surjective_hom_count(const Presentation& pres, const Quandle& target,
                               const std::vector<int>& s);

// The same polynomial as phi_e, assembled the other way: over every
// subquandle S, the count of colorings onto S times q^|S|.
Polynomial phi_e_decomposed(const Presentation& pres, const Quandle& target);

// Size of the submodule generated by the given vectors (1 for the empty set).
long long submodule_span(const Module& mod, const std::vector<Vec>& elements);

// Sum over colorings of q^|Im f| z^rho(f), rho the size of the submodule
// spanned by the image. The target must carry a module structure.
Polynomial phi_sqp(const Presentation& pres, const Quandle& target);

} // namespace symq
