#include "invariants.hpp"

#include "error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace symq {

namespace {

struct ColoringSearch {
    const Quandle& target;
    const std::vector<Relation>& rels;
    std::vector<std::vector<int>> rels_of; // relations touching each generator
    std::vector<int> order;                // branch order
    std::vector<int> value;                // 0 = unassigned
    std::vector<std::vector<int>> out;

    ColoringSearch(const Presentation& pres, const Quandle& t)
        : target(t), rels(pres.relations), rels_of(pres.generators),
          value(pres.generators, 0) {
        for (size_t ri = 0; ri < rels.size(); ++ri)
            for (int gen : {rels[ri].a, rels[ri].b, rels[ri].c}) {
                if (gen < 1 || gen > pres.generators)
                    throw Error::invalid("relation references generator " +
                                         std::to_string(gen) + " of " +
                                         std::to_string(pres.generators));
                auto& touching = rels_of[gen - 1];
                if (touching.empty() || touching.back() != static_cast<int>(ri))
                    touching.push_back(static_cast<int>(ri));
            }
        order.resize(pres.generators);
        for (int i = 0; i < pres.generators; ++i) order[i] = i + 1;
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
            return rels_of[x - 1].size() > rels_of[y - 1].size();
        });
    }

    bool assign(int gen, int val, std::vector<int>& trail) {
        std::vector<std::pair<int, int>> queue{{gen, val}};
        while (!queue.empty()) {
            auto [x, v] = queue.back();
            queue.pop_back();
            if (value[x - 1]) {
                if (value[x - 1] != v) return false;
                continue;
            }
            value[x - 1] = v;
            trail.push_back(x);
            for (int ri : rels_of[x - 1]) {
                const Relation& r = rels[ri];
                int va = value[r.a - 1], vb = value[r.b - 1], vc = value[r.c - 1];
                if (!vb) continue;
                if (r.sign > 0) {
                    if (va) queue.emplace_back(r.c, target.apply(va, vb));
                    if (vc) queue.emplace_back(r.a, target.apply_inverse(vc, vb));
                } else {
                    if (vc) queue.emplace_back(r.a, target.apply(vc, vb));
                    if (va) queue.emplace_back(r.c, target.apply_inverse(va, vb));
                }
            }
        }
        return true;
    }

    void undo(std::vector<int>& trail, size_t mark) {
        while (trail.size() > mark) {
            value[trail.back() - 1] = 0;
            trail.pop_back();
        }
    }

    void search(std::vector<int>& trail) {
        int gen = 0;
        for (int cand : order)
            if (!value[cand - 1]) {
                gen = cand;
                break;
            }
        if (!gen) {
            out.push_back(value);
            return;
        }
        for (int v = 1; v <= target.size(); ++v) {
            size_t mark = trail.size();
            if (assign(gen, v, trail)) search(trail);
            undo(trail, mark);
        }
    }
};

// image size per distinct arc-color set, memoized
struct ImageCache {
    const Quandle& target;
    std::map<std::vector<int>, std::vector<int>> cache;

    const std::vector<int>& image(const std::vector<int>& coloring) {
        std::vector<int> colors = coloring;
        std::sort(colors.begin(), colors.end());
        colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
        auto it = cache.find(colors);
        if (it == cache.end())
            it = cache.emplace(colors, target.generated_subquandle(colors)).first;
        return it->second;
    }
};

} // namespace

std::vector<std::vector<int>> enumerate_colorings(const Presentation& pres,
                                                  const Quandle& target) {
    if (pres.generators < 1) throw Error::invalid("presentation has no generators");
    ColoringSearch search(pres, target);
    std::vector<int> trail;
    search.search(trail);
    std::sort(search.out.begin(), search.out.end());
    return std::move(search.out);
}

long long counting_invariant(const Presentation& pres, const Quandle& target) {
    return static_cast<long long>(enumerate_colorings(pres, target).size());
}

Polynomial phi_e(const Presentation& pres, const Quandle& target) {
    ImageCache images{target, {}};
    Polynomial poly({"q"});
    for (const auto& coloring : enumerate_colorings(pres, target))
        poly.add_term({static_cast<int>(images.image(coloring).size())}, 1);
    return poly;
}

long long surjective_hom_count(const Presentation& pres, const Quandle& target,
                               const std::vector<int>& s) {
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (target.generated_subquandle(sorted) != sorted)
        throw Error::invalid("subset is not closed under the quandle operation");
    ImageCache images{target, {}};
    long long count = 0;
    for (const auto& coloring : enumerate_colorings(pres, target))
        if (images.image(coloring) == sorted) ++count;
    return count;
}

Polynomial phi_e_decomposed(const Presentation& pres, const Quandle& target) {
    auto subs = target.subquandles();
    ImageCache images{target, {}};
    std::map<std::vector<int>, long long> onto;
    for (const auto& coloring : enumerate_colorings(pres, target)) ++onto[images.image(coloring)];
    Polynomial poly({"q"});
    for (const auto& s : subs) {
        auto it = onto.find(s);
        if (it != onto.end()) poly.add_term({static_cast<int>(s.size())}, it->second);
    }
    return poly;
}

long long submodule_span(const Module& mod, const std::vector<Vec>& elements) {
    if (mod.element_count() > (1 << 20)) throw Error::limit("module too large to enumerate");
    const Ring& r = mod.ring();
    std::set<int> members{mod.index_of(mod.zero())};
    std::vector<Vec> work{mod.zero()};
    while (!work.empty()) {
        Vec x = std::move(work.back());
        work.pop_back();
        for (const Vec& gen : elements)
            for (int c = 0; c < r.order(); ++c) {
                Vec y = mod.add(x, mod.scale(c, gen));
                if (members.insert(mod.index_of(y)).second) work.push_back(std::move(y));
            }
    }
    return static_cast<long long>(members.size());
}

Polynomial phi_sqp(const Presentation& pres, const Quandle& target) {
    if (!target.context())
        throw Error::invalid("target quandle carries no module structure");
    const ModuleContext& ctx = *target.context();
    Module mod(ctx.ring, ctx.dim);
    if (mod.element_count() != target.size())
        throw Error::invalid("module structure does not match the quandle order");

    ImageCache images{target, {}};
    std::map<std::vector<int>, std::pair<int, long long>> stats; // image -> (|Im|, rho)
    Polynomial poly({"q", "z"});
    for (const auto& coloring : enumerate_colorings(pres, target)) {
        const std::vector<int>& im = images.image(coloring);
        auto it = stats.find(im);
        if (it == stats.end()) {
            std::vector<Vec> vectors;
            vectors.reserve(im.size());
            for (int idx : im) vectors.push_back(mod.vector_of(idx));
            it = stats.emplace(im, std::make_pair(static_cast<int>(im.size()),
                                                  submodule_span(mod, vectors)))
                     .first;
        }
        poly.add_term({it->second.first, static_cast<int>(it->second.second)}, 1);
    }
    return poly;
}

} // namespace symq
