#pragma once

#include "link.hpp"
#include "quandle.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace testing {

inline std::string fixture_path(const std::string& name) {
    return std::string(FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline symq::Quandle load_fixture_quandle(const std::string& name) {
    return symq::Quandle::parse(read_file(fixture_path(name)));
}

struct Erratum {
    int row, col;
    int table_value;      // what the reference table prints
    int definition_value; // what the operation actually yields
};

inline std::vector<Erratum> load_errata(const std::string& name) {
    std::istringstream in(read_file(fixture_path(name)));
    std::vector<Erratum> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        Erratum e{};
        if (fields >> e.row >> e.col >> e.table_value >> e.definition_value) out.push_back(e);
    }
    return out;
}

// the reference table with every erratum replaced by its definitional value
inline symq::Quandle apply_errata(const symq::Quandle& q, const std::vector<Erratum>& errata) {
    auto table = q.table();
    for (const Erratum& e : errata) table[e.row - 1][e.col - 1] = e.definition_value;
    return symq::Quandle(std::move(table));
}

inline symq::Quandle trivial_quandle(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = i + 1;
    return symq::Quandle(std::move(t));
}

// x |> y = 2y - x mod 3, the 3-element dihedral quandle
inline symq::Quandle cyclic3() {
    return symq::Quandle({{1, 3, 2}, {3, 2, 1}, {2, 1, 3}});
}

inline symq::Quandle five_element_example() {
    return symq::Quandle(
        {{1, 1, 1, 2, 1}, {2, 2, 2, 3, 2}, {3, 3, 3, 1, 3}, {4, 4, 4, 4, 4}, {5, 5, 5, 5, 5}});
}

inline symq::Presentation presentation_of(const std::string& gauss) {
    return symq::arcs_and_relations(symq::parse_gauss(gauss));
}

inline bool satisfies(const symq::Quandle& t, const symq::Relation& r,
                      const std::vector<int>& assignment) {
    int va = assignment[r.a - 1], vb = assignment[r.b - 1], vc = assignment[r.c - 1];
    return r.sign > 0 ? t.apply(va, vb) == vc : t.apply(vc, vb) == va;
}

// full |T|^g sweep, no propagation
inline std::vector<std::vector<int>> naive_colorings(const symq::Presentation& pres,
                                                     const symq::Quandle& t) {
    std::vector<std::vector<int>> out;
    std::vector<int> assignment(pres.generators, 1);
    while (true) {
        bool ok = true;
        for (const auto& r : pres.relations)
            if (!satisfies(t, r, assignment)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(assignment);
        int i = pres.generators - 1;
        while (i >= 0 && assignment[i] == t.size()) assignment[i--] = 1;
        if (i < 0) break;
        ++assignment[i];
    }
    return out;
}

// all nonempty closed subsets by direct subset sweep, n <= 16
inline std::vector<std::vector<int>> naive_subquandles(const symq::Quandle& q) {
    const int n = q.size();
    std::vector<std::vector<int>> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> members;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) members.push_back(i + 1);
        bool closed = true;
        for (int x : members)
            for (int y : members)
                if (!(mask & (1u << (q.apply(x, y) - 1))) ||
                    !(mask & (1u << (q.apply_inverse(x, y) - 1)))) {
                    closed = false;
                    break;
                }
        if (closed) out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

// permutation sweep, n <= 7
inline bool naive_isomorphic(const symq::Quandle& a, const symq::Quandle& b) {
    const int n = a.size();
    if (b.size() != n) return false;
    std::vector<int> phi(n);
    std::iota(phi.begin(), phi.end(), 1);
    do {
        bool ok = true;
        for (int i = 1; i <= n && ok; ++i)
            for (int j = 1; j <= n && ok; ++j)
                ok = phi[a.apply(i, j) - 1] == b.apply(phi[i - 1], phi[j - 1]);
        if (ok) return true;
    } while (std::next_permutation(phi.begin(), phi.end()));
    return false;
}

} // namespace testing
