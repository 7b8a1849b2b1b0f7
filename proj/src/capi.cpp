#include "symq/symq.h"

#include "error.hpp"
#include "invariants.hpp"
#include "link.hpp"
#include "quandle.hpp"
#include "ring.hpp"
#include "symplectic.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>

using nlohmann::ordered_json;

struct symq_quandle {
    symq::Quandle impl;
};

struct symq_link {
    symq::GaussCode code;
    symq::Presentation pres;
};

namespace {

thread_local std::string g_error;

template <typename F>
int guarded(F&& body) {
    try {
        body();
        return SYMQ_OK;
    } catch (const symq::Error& e) {
        g_error = e.what();
        return e.code() == symq::Errc::limit_exceeded ? SYMQ_ERR_LIMIT : SYMQ_ERR_INVALID;
    } catch (const std::exception& e) {
        g_error = e.what();
        return SYMQ_ERR_INVALID;
    }
}

int fail_null(const char* what) {
    g_error = std::string("null ") + what;
    return SYMQ_ERR_INVALID;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

symq::SymplecticSpace make_space(const char* ring_spec, int dim, const char* gram) {
    symq::Ring ring = symq::Ring::parse(ring_spec ? ring_spec : "");
    symq::Gram g = symq::Gram::parse(ring, gram ? gram : "");
    return {std::move(ring), dim, std::move(g)};
}

ordered_json poly_json(const symq::Polynomial& p) { return ordered_json::parse(p.to_json()); }

} // namespace

extern "C" {

const char* symq_version(void) { return "0.1.0"; }

const char* symq_last_error(void) { return g_error.c_str(); }

void symq_string_free(char* s) { std::free(s); }

int symq_quandle_build(const char* ring_spec, int dim, const char* gram, long long cap,
                       symq_quandle** out) {
    if (!out) return fail_null("output pointer");
    return guarded([&] {
        auto space = make_space(ring_spec, dim, gram);
        *out = new symq_quandle{symq::build_symplectic(space, cap > 0 ? cap : 4096)};
    });
}

int symq_quandle_parse(const char* table_text, symq_quandle** out) {
    if (!out) return fail_null("output pointer");
    if (!table_text) return fail_null("table text");
    return guarded([&] { *out = new symq_quandle{symq::Quandle::parse(table_text)}; });
}

void symq_quandle_free(symq_quandle* q) { delete q; }

int symq_quandle_order(const symq_quandle* q) { return q ? q->impl.size() : 0; }

int symq_quandle_format(const symq_quandle* q, char** out) {
    if (!q) return fail_null("quandle");
    if (!out) return fail_null("output pointer");
    return guarded([&] { *out = dup_string(q->impl.format()); });
}

int symq_quandle_validate(const symq_quandle* q, int* violation_count, char** report) {
    if (!q) return fail_null("quandle");
    if (!violation_count) return fail_null("output pointer");
    return guarded([&] {
        auto violations = q->impl.validate();
        *violation_count = static_cast<int>(violations.size());
        if (report) {
            std::string text;
            for (const auto& v : violations) {
                text += v.describe();
                text += '\n';
            }
            *report = dup_string(text);
        }
    });
}

int symq_quandle_dual(const symq_quandle* q, symq_quandle** out) {
    if (!q) return fail_null("quandle");
    if (!out) return fail_null("output pointer");
    return guarded([&] { *out = new symq_quandle{q->impl.dual()}; });
}

int symq_quandle_union(const symq_quandle* a, const symq_quandle* b, symq_quandle** out) {
    if (!a || !b) return fail_null("quandle");
    if (!out) return fail_null("output pointer");
    return guarded([&] { *out = new symq_quandle{a->impl.disjoint_union(b->impl)}; });
}

int symq_quandle_orbits(const symq_quandle* q, char** json) {
    if (!q) return fail_null("quandle");
    if (!json) return fail_null("output pointer");
    return guarded([&] { *json = dup_string(ordered_json(q->impl.orbits()).dump()); });
}

int symq_quandle_trivial_component(const symq_quandle* q, char** json) {
    if (!q) return fail_null("quandle");
    if (!json) return fail_null("output pointer");
    return guarded(
        [&] { *json = dup_string(ordered_json(q->impl.trivial_component()).dump()); });
}

int symq_quandle_almost_connected(const symq_quandle* q, int* out) {
    if (!q) return fail_null("quandle");
    if (!out) return fail_null("output pointer");
    return guarded([&] { *out = q->impl.is_almost_connected() ? 1 : 0; });
}

int symq_quandle_qpoly(const symq_quandle* q, int as_json, char** out) {
    if (!q) return fail_null("quandle");
    if (!out) return fail_null("output pointer");
    return guarded([&] {
        auto poly = q->impl.quandle_polynomial();
        *out = dup_string(as_json ? poly.to_json() : poly.to_string());
    });
}

int symq_quandle_subquandles(const symq_quandle* q, long long cap, char** json) {
    if (!q) return fail_null("quandle");
    if (!json) return fail_null("output pointer");
    return guarded([&] {
        auto subs = q->impl.subquandles(cap > 0 ? static_cast<std::size_t>(cap) : 100000);
        *json = dup_string(ordered_json(subs).dump());
    });
}

int symq_quandle_isomorphism(const symq_quandle* a, const symq_quandle* b, char** json) {
    if (!a || !b) return fail_null("quandle");
    if (!json) return fail_null("output pointer");
    return guarded([&] {
        auto phi = a->impl.find_isomorphism(b->impl);
        ordered_json out;
        out["isomorphic"] = phi.has_value();
        out["map"] = phi ? ordered_json(*phi) : ordered_json(nullptr);
        *json = dup_string(out.dump());
    });
}

int symq_symplectic_radical(const char* ring_spec, int dim, const char* gram, char** json) {
    if (!json) return fail_null("output pointer");
    return guarded([&] {
        auto space = make_space(ring_spec, dim, gram);
        symq::Module mod = space.module();
        auto vectors = symq::radical(space);
        ordered_json out;
        out["count"] = vectors.size();
        auto& indices = out["indices"] = ordered_json::array();
        for (const auto& v : vectors) indices.push_back(mod.index_of(v));
        out["vectors"] = vectors;
        *json = dup_string(out.dump());
    });
}

int symq_symplectic_reduce(const char* ring_spec, int dim, const char* gram, char** json) {
    if (!json) return fail_null("output pointer");
    return guarded([&] {
        auto space = make_space(ring_spec, dim, gram);
        auto res = symq::symplectic_reduce(space);
        ordered_json out;
        out["rank"] = res.rank;
        out["basis"] = res.basis;
        out["standard_form"] = symq::standard_form(space.ring, space.dim, res.rank);
        *json = dup_string(out.dump());
    });
}

int symq_symplectic_isometric(const char* ring_spec, int dim, const char* gram_a,
                              const char* gram_b, char** json) {
    if (!json) return fail_null("output pointer");
    return guarded([&] {
        auto a = make_space(ring_spec, dim, gram_a);
        auto b = make_space(ring_spec, dim, gram_b);
        auto report = symq::is_isometric(a, b);
        ordered_json out;
        out["isometric"] = report.isometric;
        out["witness"] = report.witness ? ordered_json(*report.witness) : ordered_json(nullptr);
        *json = dup_string(out.dump());
    });
}

int symq_scan_conjecture(int lo, int hi, int dim, char** json) {
    if (!json) return fail_null("output pointer");
    return guarded([&] {
        auto report = symq::conjecture_scan(lo, hi, dim);
        ordered_json out;
        out["all_agree"] = report.all_agree;
        auto& moduli = out["moduli"] = ordered_json::array();
        for (const auto& entry : report.entries) {
            ordered_json e;
            e["modulus"] = entry.modulus;
            e["isomorphism_classes"] = entry.isomorphism_classes;
            e["isometry_classes"] = entry.isometry_classes;
            e["agree"] = entry.agree;
            e["counterexample"] =
                entry.counterexample
                    ? ordered_json{entry.counterexample->first, entry.counterexample->second}
                    : ordered_json(nullptr);
            moduli.push_back(std::move(e));
        }
        *json = dup_string(out.dump());
    });
}

int symq_link_parse(const char* gauss, symq_link** out) {
    if (!out) return fail_null("output pointer");
    if (!gauss) return fail_null("gauss code");
    return guarded([&] {
        auto code = symq::parse_gauss(gauss);
        auto pres = symq::arcs_and_relations(code);
        *out = new symq_link{std::move(code), std::move(pres)};
    });
}

void symq_link_free(symq_link* l) { delete l; }

int symq_link_info(const symq_link* l, char** json) {
    if (!l) return fail_null("link");
    if (!json) return fail_null("output pointer");
    return guarded([&] {
        ordered_json out;
        out["components"] = l->code.components.size();
        out["crossings"] = l->code.crossing_count();
        out["generators"] = l->pres.generators;
        auto& rels = out["relations"] = ordered_json::array();
        for (const auto& r : l->pres.relations)
            rels.push_back(ordered_json{{"a", r.a}, {"b", r.b}, {"c", r.c}, {"sign", r.sign}});
        *json = dup_string(out.dump());
    });
}

int symq_invariant_count(const symq_link* l, const symq_quandle* t, long long* out) {
    if (!l) return fail_null("link");
    if (!t) return fail_null("quandle");
    if (!out) return fail_null("output pointer");
    return guarded([&] { *out = symq::counting_invariant(l->pres, t->impl); });
}

int symq_invariant_phi_e(const symq_link* l, const symq_quandle* t, int as_json, char** out) {
    if (!l) return fail_null("link");
    if (!t) return fail_null("quandle");
    if (!out) return fail_null("output pointer");
    return guarded([&] {
        auto poly = symq::phi_e(l->pres, t->impl);
        *out = dup_string(as_json ? poly.to_json() : poly.to_string());
    });
}

int symq_invariant_phi_sqp(const symq_link* l, const symq_quandle* t, int as_json, char** out) {
    if (!l) return fail_null("link");
    if (!t) return fail_null("quandle");
    if (!out) return fail_null("output pointer");
    return guarded([&] {
        auto poly = symq::phi_sqp(l->pres, t->impl);
        *out = dup_string(as_json ? poly.to_json() : poly.to_string());
    });
}

int symq_invariant_all(const symq_link* l, const symq_quandle* t, char** json) {
    if (!l) return fail_null("link");
    if (!t) return fail_null("quandle");
    if (!json) return fail_null("output pointer");
    return guarded([&] {
        ordered_json out;
        if (t->impl.context()) {
            auto sqp = symq::phi_sqp(l->pres, t->impl);
            auto pe = sqp.specialize("z", 1);
            out["count"] = pe.specialize("q", 1).constant_value();
            out["phi_e"] = poly_json(pe);
            out["phi_sqp"] = poly_json(sqp);
        } else {
            auto pe = symq::phi_e(l->pres, t->impl);
            out["count"] = pe.specialize("q", 1).constant_value();
            out["phi_e"] = poly_json(pe);
            out["phi_sqp"] = nullptr;
        }
        *json = dup_string(out.dump());
    });
}

} // extern "C"
