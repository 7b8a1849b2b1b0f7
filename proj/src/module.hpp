#pragma once

#include "ring.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace symq {

// Element of R^d as a vector of element codes, first coordinate least
// significant in the canonical index.
using Vec = std::vector<int>;

// d x d matrix of ring element codes, validated antisymmetric (A^T = -A)
// and alternating (zero diagonal; required independently in characteristic 2).
class Gram {
public:
    Gram(const Ring& ring, std::vector<std::vector<int>> entries);

    // Rows separated by ';', entries by ','. An entry may be negative:
    // "-c" denotes the ring negation of code c.
    static Gram parse(const Ring& ring, std::string_view text);

    int dim() const { return static_cast<int>(entries_.size()); }
    int at(int i, int j) const { return entries_[i][j]; } // 0-based
    const std::vector<std::vector<int>>& entries() const { return entries_; }
    std::string to_string() const;

private:
    std::vector<std::vector<int>> entries_;
};

// The free module R^d with the canonical element indexing
//   index(x) = 1 + sum_i code(x_i) * |R|^(i-1),
// a bijection between vectors and 1..|R|^d.
class Module {
public:
    Module(Ring ring, int dim);

    const Ring& ring() const { return ring_; }
    int dim() const { return dim_; }
    long long element_count() const { return count_; }

    Vec zero() const { return Vec(dim_, 0); }
    Vec add(const Vec& x, const Vec& y) const;
    Vec scale(int c, const Vec& x) const;
    Vec negate(const Vec& x) const;

    // <x,y> = x A y^T.
    int bilinear(const Gram& a, const Vec& x, const Vec& y) const;

    int index_of(const Vec& x) const;      // 1-based
    Vec vector_of(long long index) const;  // 1 <= index <= |R|^d

private:
    Ring ring_;
    int dim_;
    long long count_;
};

} // namespace symq
