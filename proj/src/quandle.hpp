#pragma once

#include "module.hpp"
#include "polynomial.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symq {

// A finite quandle given by its operation table. Elements are the indices
// 1..n and table(i, j) is the index of x_i |> x_j.
//
// Quandles produced from a symplectic form keep the underlying ring, module
// dimension, and Gram matrix around so module-level invariants can be
// computed later.
struct ModuleContext {
    Ring ring;
    int dim;
    Gram gram;
};

struct Violation {
    // "idempotence", "column", or "distributivity"
    std::string axiom;
    // elements involved, 1-based; column collisions report (i, j, k) with
    // table(i, k) == table(j, k), distributivity reports the triple (i, j, k)
    std::vector<int> witness;
    std::string describe() const;
};

class Quandle {
  public:
    explicit Quandle(std::vector<std::vector<int>> table,
                     std::optional<ModuleContext> context = std::nullopt);

    // Parses a whitespace-separated n x n table of 1-based indices, one row
    // per line. Shape and range errors throw; axiom failures do not (use
    // validate()).
    static Quandle parse(std::string_view text);

    int size() const { return static_cast<int>(table_.size()); }
    // 1-based on both sides.
    int apply(int i, int j) const { return table_[i - 1][j - 1]; }
    // x |>^{-1} y: the unique z with apply(z, j) == i.
    int apply_inverse(int i, int j) const { return inverse_[i - 1][j - 1]; }
    const std::vector<std::vector<int>>& table() const { return table_; }
    const std::optional<ModuleContext>& context() const { return context_; }

    std::string format() const;

    // Empty iff all three quandle axioms hold.
    std::vector<Violation> validate() const;

    Quandle dual() const;

    // Partition of 1..n into orbits of the right-translation group, each part
    // sorted, parts ordered by smallest element.
    std::vector<std::vector<int>> orbits() const;

    // Elements x with x |> y == x and y |> x == y for all y, sorted.
    std::vector<int> trivial_component() const;

    // True when every orbit is either a singleton inside the trivial
    // component or the whole complement of the trivial component.
    bool is_almost_connected() const;

    // Block-diagonal union; elements of `other` are shifted up by size().
    Quandle disjoint_union(const Quandle& other) const;

    // sum over i of s^c(i) t^r(i) where c(i) counts j with x_j |> x_i == x_j
    // and r(i) counts j with x_i |> x_j == x_i.
    Polynomial quandle_polynomial() const;

    // Smallest superset of `seed` closed under |> and |>^{-1}, sorted.
    std::vector<int> generated_subquandle(std::vector<int> seed) const;

    // All nonempty subsets closed under |> and |>^{-1}, sorted by size then
    // lexicographically. Throws once more than `cap` subquandles exist.
    std::vector<std::vector<int>> subquandles(std::size_t cap = 100000) const;

    // An isomorphism onto `other` as a 1-based image vector, or nullopt.
    // Deterministic: branches in ascending element order, so the returned map
    // is the lexicographically least isomorphism.
    std::optional<std::vector<int>> find_isomorphism(const Quandle& other) const;

  private:
    std::vector<std::vector<int>> table_;
    std::vector<std::vector<int>> inverse_;
    std::optional<ModuleContext> context_;
};

} // namespace symq
