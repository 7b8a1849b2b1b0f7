#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace symq {

// One pass through a crossing: O<label><sign> or U<label><sign>.
struct Token {
    bool over;
    int label;
    int sign; // +1 or -1
};

// A signed Gauss code, one token sequence per link component. Codes that are
// not planar-realizable are accepted; they describe virtual links. An empty
// token sequence is a zero-crossing unknot component.
struct GaussCode {
    std::vector<std::vector<Token>> components;
    int crossing_count() const;
};

// Grammar: components separated by ','; whitespace ignored; sign is '+', '-',
// or a Unicode minus. Each crossing label must occur exactly twice, once over
// and once under, with the same sign.
GaussCode parse_gauss(std::string_view text);

// a |> b = c when sign is +1; a |>^{-1} b = c (that is, c |> b = a) when -1.
struct Relation {
    int a, b, c;
    int sign;
};

// One generator per arc, one relation per crossing. At the under-pass of
// crossing k: a = the arc ending there, c = the arc leaving it, b = the arc
// carrying the over-pass. Positive crossing: c = a |> b.
struct Presentation {
    int generators;
    std::vector<Relation> relations; // in ascending crossing-label order
};

// Arcs are the maximal runs between under-passes of a component, numbered in
// traversal order, components in input order; an under-free component is a
// single arc.
Presentation arcs_and_relations(const GaussCode& code);

} // namespace symq
