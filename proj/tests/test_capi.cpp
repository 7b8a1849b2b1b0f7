#include <symq/symq.h>

#include <doctest.h>
#include <json.hpp>

#include <cstring>
#include <string>

using json = nlohmann::json;

namespace {

struct Str {
    char* p = nullptr;
    ~Str() { symq_string_free(p); }
    std::string get() const { return p ? p : ""; }
};

struct QH {
    symq_quandle* q = nullptr;
    ~QH() { symq_quandle_free(q); }
};

struct LH {
    symq_link* l = nullptr;
    ~LH() { symq_link_free(l); }
};

QH build(const char* ring, int dim, const char* gram) {
    QH h;
    REQUIRE(symq_quandle_build(ring, dim, gram, 0, &h.q) == SYMQ_OK);
    return h;
}

LH link(const char* gauss) {
    LH h;
    REQUIRE(symq_link_parse(gauss, &h.l) == SYMQ_OK);
    return h;
}

} // namespace

TEST_CASE("version and error plumbing") {
    CHECK(symq_version() != nullptr);
    CHECK(std::strlen(symq_version()) > 0);

    symq_quandle* q = nullptr;
    CHECK(symq_quandle_build("Z1", 2, "0,0;0,0", 0, &q) == SYMQ_ERR_INVALID);
    CHECK(q == nullptr);
    CHECK(std::strlen(symq_last_error()) > 0);

    symq_string_free(nullptr); // must be a no-op
}

TEST_CASE("quandle build, format, parse round trip") {
    QH built = build("Z4", 2, "0,2;2,0");
    CHECK(symq_quandle_order(built.q) == 16);

    Str text;
    REQUIRE(symq_quandle_format(built.q, &text.p) == SYMQ_OK);

    QH parsed;
    REQUIRE(symq_quandle_parse(text.p, &parsed.q) == SYMQ_OK);
    CHECK(symq_quandle_order(parsed.q) == 16);

    Str again;
    REQUIRE(symq_quandle_format(parsed.q, &again.p) == SYMQ_OK);
    CHECK(text.get() == again.get());

    SUBCASE("caps and bad input") {
        symq_quandle* q = nullptr;
        CHECK(symq_quandle_build("Z11", 4, "0,1,0,0;-1,0,0,0;0,0,0,1;0,0,-1,0", 0, &q) ==
              SYMQ_ERR_LIMIT);
        CHECK(symq_quandle_build("Z2", 4, "0,1,0,0;1,0,0,0;0,0,0,1;0,0,1,0", 10, &q) ==
              SYMQ_ERR_LIMIT);
        CHECK(symq_quandle_build("Z2", 4, "0,1,0,0;1,0,0,0;0,0,0,1;0,0,1,0", 16, &q) ==
              SYMQ_OK);
        CHECK(symq_quandle_order(q) == 16);
        symq_quandle_free(q);

        q = nullptr;
        CHECK(symq_quandle_build("Z4", 2, "0,1;1,0", 0, &q) == SYMQ_ERR_INVALID);
        CHECK(symq_quandle_parse("1 3\n2 2", &q) == SYMQ_ERR_INVALID); // entry out of range
        CHECK(symq_quandle_parse("1 2\n2", &q) == SYMQ_ERR_INVALID);   // ragged rows
        CHECK(symq_quandle_parse("", &q) == SYMQ_ERR_INVALID);
    }

    SUBCASE("null handles are rejected, not crashed on") {
        CHECK(symq_quandle_order(nullptr) == 0);
        Str out;
        CHECK(symq_quandle_format(nullptr, &out.p) == SYMQ_ERR_INVALID);
        CHECK(symq_quandle_build(nullptr, 2, "0,1;1,0", 0, nullptr) == SYMQ_ERR_INVALID);
        symq_quandle_free(nullptr);
    }
}

TEST_CASE("validation reports axiom failures") {
    QH good;
    REQUIRE(symq_quandle_parse("1 3 2\n3 2 1\n2 1 3", &good.q) == SYMQ_OK);
    int violations = -1;
    REQUIRE(symq_quandle_validate(good.q, &violations, nullptr) == SYMQ_OK);
    CHECK(violations == 0);

    QH bad;
    REQUIRE(symq_quandle_parse("1 1\n1 2", &bad.q) == SYMQ_OK);
    Str report;
    REQUIRE(symq_quandle_validate(bad.q, &violations, &report.p) == SYMQ_OK);
    CHECK(violations > 0);
    CHECK(report.get().find("axiom") != std::string::npos);
}

TEST_CASE("structure queries return well-formed JSON") {
    QH mv = build("Z2", 4, "0,1,0,0;1,0,0,0;0,0,0,1;0,0,1,0");

    Str orbits;
    REQUIRE(symq_quandle_orbits(mv.q, &orbits.p) == SYMQ_OK);
    json o = json::parse(orbits.get());
    REQUIRE(o.is_array());
    CHECK(o.size() == 2);
    CHECK(o[0] == json::array({1}));
    CHECK(o[1].size() == 15);

    Str trivial;
    REQUIRE(symq_quandle_trivial_component(mv.q, &trivial.p) == SYMQ_OK);
    CHECK(json::parse(trivial.get()) == json::array({1}));

    int almost = 0;
    REQUIRE(symq_quandle_almost_connected(mv.q, &almost) == SYMQ_OK);
    CHECK(almost == 1);

    QH degenerate = build("Z4", 2, "0,2;2,0");
    REQUIRE(symq_quandle_almost_connected(degenerate.q, &almost) == SYMQ_OK);
    CHECK(almost == 0);

    SUBCASE("polynomial, both renderings") {
        Str text;
        REQUIRE(symq_quandle_qpoly(mv.q, 0, &text.p) == SYMQ_OK);
        CHECK(text.get() == "s^16t^16 + 15s^8t^8");

        Str as_json;
        REQUIRE(symq_quandle_qpoly(mv.q, 1, &as_json.p) == SYMQ_OK);
        json j = json::parse(as_json.get());
        CHECK(j["vars"] == json::array({"s", "t"}));
        CHECK(j["terms"][0]["exp"] == json::array({16, 16}));
        CHECK(j["terms"][0]["coef"] == 1);
        CHECK(j["terms"][1]["coef"] == 15);
    }

    SUBCASE("subquandles with cap") {
        Str subs;
        REQUIRE(symq_quandle_subquandles(mv.q, 0, &subs.p) == SYMQ_OK);
        json s = json::parse(subs.get());
        CHECK(s.size() == 405);
        CHECK(s[0].size() == 1);
        CHECK(s[s.size() - 1].size() == 16);

        Str capped;
        CHECK(symq_quandle_subquandles(mv.q, 10, &capped.p) == SYMQ_ERR_LIMIT);
    }

    SUBCASE("dual and union") {
        QH d;
        REQUIRE(symq_quandle_dual(mv.q, &d.q) == SYMQ_OK);
        Str a, b;
        REQUIRE(symq_quandle_format(mv.q, &a.p) == SYMQ_OK);
        REQUIRE(symq_quandle_format(d.q, &b.p) == SYMQ_OK);
        CHECK(a.get() == b.get()); // characteristic 2

        QH u;
        REQUIRE(symq_quandle_union(mv.q, d.q, &u.q) == SYMQ_OK);
        CHECK(symq_quandle_order(u.q) == 32);
    }

    SUBCASE("isomorphism between the 16-element spaces") {
        QH mvp = build("GF(2^2)/t^2+t+1", 2, "0,1;1,0");
        Str j;
        REQUIRE(symq_quandle_isomorphism(mv.q, mvp.q, &j.p) == SYMQ_OK);
        json r = json::parse(j.get());
        CHECK(r["isomorphic"] == false);
        CHECK(r["map"].is_null());

        Str self;
        REQUIRE(symq_quandle_isomorphism(mv.q, mv.q, &self.p) == SYMQ_OK);
        json rs = json::parse(self.get());
        CHECK(rs["isomorphic"] == true);
        REQUIRE(rs["map"].is_array());
        CHECK(rs["map"].size() == 16);
    }
}

TEST_CASE("symplectic form queries") {
    Str rad;
    REQUIRE(symq_symplectic_radical("Z4", 2, "0,2;2,0", &rad.p) == SYMQ_OK);
    json r = json::parse(rad.get());
    CHECK(r["count"] == 4);
    CHECK(r["indices"] == json::array({1, 3, 9, 11}));
    CHECK(r["vectors"][0] == json::array({0, 0}));

    Str red;
    REQUIRE(symq_symplectic_reduce("Z3", 2, "0,2;1,0", &red.p) == SYMQ_OK);
    json rr = json::parse(red.get());
    CHECK(rr["rank"] == 2);
    CHECK(rr["basis"].size() == 2);
    CHECK(rr["standard_form"] == json::array({{0, 1}, {2, 0}}));
    CHECK(symq_symplectic_reduce("Z4", 2, "0,2;2,0", &red.p) == SYMQ_ERR_INVALID);

    Str iso;
    REQUIRE(symq_symplectic_isometric("Z4", 2, "0,1;-1,0", "0,3;-3,0", &iso.p) ==
            SYMQ_OK);
    json ri = json::parse(iso.get());
    CHECK(ri["isometric"] == true);
    REQUIRE(ri["witness"].is_array());

    Str niso;
    REQUIRE(symq_symplectic_isometric("Z4", 2, "0,1;-1,0", "0,2;-2,0", &niso.p) ==
            SYMQ_OK);
    CHECK(json::parse(niso.get())["isometric"] == false);
    CHECK(json::parse(niso.get())["witness"].is_null());

    Str scan;
    REQUIRE(symq_scan_conjecture(2, 4, 2, &scan.p) == SYMQ_OK);
    json rs = json::parse(scan.get());
    CHECK(rs["all_agree"] == true);
    REQUIRE(rs["moduli"].size() == 3);
    CHECK(rs["moduli"][2]["modulus"] == 4);
    CHECK(rs["moduli"][2]["isometry_classes"] == json::array({{0}, {1, 3}, {2}}));
    CHECK(rs["moduli"][2]["agree"] == true);
    CHECK(rs["moduli"][2]["counterexample"].is_null());
    CHECK(symq_scan_conjecture(2, 4, 3, &scan.p) == SYMQ_ERR_INVALID);
    CHECK(symq_scan_conjecture(2, 99, 2, &scan.p) == SYMQ_ERR_LIMIT);
}

TEST_CASE("link parsing and info") {
    LH trefoil = link("O1+U2+O3+U1+O2+U3+");
    Str info;
    REQUIRE(symq_link_info(trefoil.l, &info.p) == SYMQ_OK);
    json j = json::parse(info.get());
    CHECK(j["components"] == 1);
    CHECK(j["crossings"] == 3);
    CHECK(j["generators"] == 3);
    REQUIRE(j["relations"].size() == 3);
    CHECK(j["relations"][0]["a"] == 2);
    CHECK(j["relations"][0]["b"] == 1);
    CHECK(j["relations"][0]["c"] == 3);
    CHECK(j["relations"][0]["sign"] == 1);

    symq_link* l = nullptr;
    CHECK(symq_link_parse("O1+U1-", &l) == SYMQ_ERR_INVALID);
    CHECK(l == nullptr);
    CHECK(std::strlen(symq_last_error()) > 0);
}

TEST_CASE("invariants through the C boundary") {
    LH trefoil = link("O1+U2+O3+U1+O2+U3+");
    QH nine = build("Z3", 2, "0,1;-1,0");

    long long count = 0;
    REQUIRE(symq_invariant_count(trefoil.l, nine.q, &count) == SYMQ_OK);
    CHECK(count == 9);

    Str phie;
    REQUIRE(symq_invariant_phi_e(trefoil.l, nine.q, 0, &phie.p) == SYMQ_OK);
    CHECK(phie.get() == "9q"); // all nine colorings are constant

    Str phisqp;
    REQUIRE(symq_invariant_phi_sqp(trefoil.l, nine.q, 0, &phisqp.p) == SYMQ_OK);
    CHECK(phisqp.get() == "8qz^3 + qz");

    SUBCASE("json renderings parse") {
        Str j;
        REQUIRE(symq_invariant_phi_e(trefoil.l, nine.q, 1, &j.p) == SYMQ_OK);
        CHECK(json::parse(j.get())["vars"] == json::array({"q"}));
    }

    SUBCASE("aggregate call") {
        Str all;
        REQUIRE(symq_invariant_all(trefoil.l, nine.q, &all.p) == SYMQ_OK);
        json a = json::parse(all.get());
        CHECK(a["count"] == 9);
        CHECK(a["phi_e"]["vars"] == json::array({"q"}));
        CHECK(a["phi_sqp"]["vars"] == json::array({"q", "z"}));
    }

    SUBCASE("tables without module structure have no phi_sqp") {
        QH parsed;
        REQUIRE(symq_quandle_parse("1 3 2\n3 2 1\n2 1 3", &parsed.q) == SYMQ_OK);
        long long c = 0;
        REQUIRE(symq_invariant_count(trefoil.l, parsed.q, &c) == SYMQ_OK);
        CHECK(c == 9);
        Str out;
        CHECK(symq_invariant_phi_sqp(trefoil.l, parsed.q, 0, &out.p) ==
              SYMQ_ERR_INVALID);
        Str all;
        REQUIRE(symq_invariant_all(trefoil.l, parsed.q, &all.p) == SYMQ_OK);
        json a = json::parse(all.get());
        CHECK(a["count"] == 9);
        CHECK(a["phi_sqp"].is_null());
    }
}
