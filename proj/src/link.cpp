#include "link.hpp"

#include "error.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace symq {

int GaussCode::crossing_count() const {
    int tokens = 0;
    for (const auto& comp : components) tokens += static_cast<int>(comp.size());
    return tokens / 2;
}

GaussCode parse_gauss(std::string_view text) {
    GaussCode code;
    code.components.emplace_back();
    size_t i = 0;
    auto fail = [&](const std::string& what) {
        throw Error::invalid(what + " at position " + std::to_string(i));
    };
    auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    while (true) {
        skip_space();
        if (i >= text.size()) break;
        char ch = text[i];
        if (ch == ',') {
            code.components.emplace_back();
            ++i;
            continue;
        }
        if (ch != 'O' && ch != 'U') fail(std::string("unexpected character '") + ch + "'");
        Token tok;
        tok.over = ch == 'O';
        ++i;
        skip_space();
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            fail("expected crossing label");
        int label = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            label = label * 10 + (text[i] - '0');
            if (label > 1000000) fail("crossing label too large");
            ++i;
        }
        if (label == 0) fail("crossing labels start at 1");
        tok.label = label;
        skip_space();
        if (i < text.size() && text[i] == '+') {
            tok.sign = 1;
            ++i;
        } else if (i < text.size() && text[i] == '-') {
            tok.sign = -1;
            ++i;
        } else if (i + 3 <= text.size() && text.substr(i, 3) == "\xe2\x88\x92") {
            tok.sign = -1;
            i += 3;
        } else {
            fail("expected sign '+' or '-'");
        }
        code.components.back().push_back(tok);
    }

    std::map<int, std::vector<Token>> seen;
    for (const auto& comp : code.components)
        for (const Token& tok : comp) seen[tok.label].push_back(tok);
    for (const auto& [label, occurrences] : seen) {
        if (occurrences.size() != 2)
            throw Error::invalid("crossing " + std::to_string(label) + " appears " +
                                 std::to_string(occurrences.size()) + " times (expected 2)");
        if (occurrences[0].over == occurrences[1].over)
            throw Error::invalid("crossing " + std::to_string(label) +
                                 " appears twice as " +
                                 (occurrences[0].over ? "over" : "under"));
        if (occurrences[0].sign != occurrences[1].sign)
            throw Error::invalid("crossing " + std::to_string(label) + " has mismatched signs");
    }
    return code;
}

Presentation arcs_and_relations(const GaussCode& code) {
    // arc id of every token, indexed by (component, position)
    std::vector<std::vector<int>> arc_of(code.components.size());
    int arcs = 0;
    for (size_t ci = 0; ci < code.components.size(); ++ci) {
        const auto& comp = code.components[ci];
        std::vector<int> unders;
        for (size_t p = 0; p < comp.size(); ++p)
            if (!comp[p].over) unders.push_back(static_cast<int>(p));
        arc_of[ci].assign(comp.size(), 0);
        if (unders.empty()) {
            ++arcs; // the whole component, even when it has no tokens
            for (size_t p = 0; p < comp.size(); ++p) arc_of[ci][p] = arcs;
            continue;
        }
        // positions up to the first under-pass, and those after the last one,
        // share the arc that wraps through the component's start
        int first_arc = arcs + 1;
        arcs += static_cast<int>(unders.size());
        size_t next_under = 0;
        int current = first_arc;
        for (size_t p = 0; p < comp.size(); ++p) {
            arc_of[ci][p] = current;
            if (next_under < unders.size() && static_cast<int>(p) == unders[next_under]) {
                ++next_under;
                current = next_under < unders.size() ? first_arc + static_cast<int>(next_under)
                                                     : first_arc;
            }
        }
    }

    struct Pass {
        int component;
        int position;
        int sign;
    };
    std::map<int, Pass> under, over;
    for (size_t ci = 0; ci < code.components.size(); ++ci)
        for (size_t p = 0; p < code.components[ci].size(); ++p) {
            const Token& tok = code.components[ci][p];
            Pass pass{static_cast<int>(ci), static_cast<int>(p), tok.sign};
            (tok.over ? over : under)[tok.label] = pass;
        }

    Presentation pres;
    pres.generators = arcs;
    for (const auto& [label, u] : under) {
        const auto& comp = code.components[u.component];
        int a = arc_of[u.component][u.position];
        int c = arc_of[u.component][(u.position + 1) % comp.size()];
        int b = arc_of[over.at(label).component][over.at(label).position];
        pres.relations.push_back({a, b, c, u.sign});
    }
    return pres;
}

} // namespace symq
