#pragma once

#include "module.hpp"
#include "quandle.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace symq {

// A free module R^d together with an antisymmetric alternating form given by
// its Gram matrix. The quandle operation is x |> y = x + <x,y>y.
struct SymplecticSpace {
    Ring ring;
    int dim;
    Gram gram;

    SymplecticSpace(Ring r, int d, Gram g);
    Module module() const { return Module(ring, dim); }
};

// Materializes the operation table under the canonical element indexing and
// attaches the module structure. Throws once |R|^d exceeds `cap`.
Quandle build_symplectic(const SymplecticSpace& space, long long cap = 4096);

// {x : <x,y> = 0 for all y}, i.e. the solutions of xA = 0, in index order.
std::vector<Vec> radical(const SymplecticSpace& space);

// Change of basis over a field: basis rows B satisfy B A B^T =
// [[0,1],[-1,0]] ⊕ ... ⊕ 0, with `rank` the number of hyperbolic rows.
struct ReduceResult {
    std::vector<std::vector<int>> basis;
    int rank;
};
ReduceResult symplectic_reduce(const SymplecticSpace& space);

// The block-diagonal target of the reduction: `rank`/2 hyperbolic blocks
// followed by zeros.
std::vector<std::vector<int>> standard_form(const Ring& ring, int dim, int rank);

struct IsometryReport {
    bool isometric;
    // P with P * gram(a) * P^T = gram(b) and unit determinant.
    std::optional<std::vector<std::vector<int>>> witness;
};

// Dimension 2 is decided by unit scaling of the off-diagonal entry; higher
// dimensions search all |R|^(d^2) matrices and throw beyond `cap`.
IsometryReport is_isometric(const SymplecticSpace& a, const SymplecticSpace& b,
                            long long cap = 10000000);

// For each modulus n in lo..hi: the forms [[0,a],[-a,0]] over Z_n, partitioned
// two ways. Classes list the values a, grouped in ascending order.
struct ConjectureEntry {
    int modulus;
    std::vector<std::vector<int>> isomorphism_classes;
    std::vector<std::vector<int>> isometry_classes;
    bool agree;
    std::optional<std::pair<int, int>> counterexample;
};

struct ConjectureReport {
    std::vector<ConjectureEntry> entries;
    bool all_agree;
};

ConjectureReport conjecture_scan(int lo, int hi, int dim);

} // namespace symq
