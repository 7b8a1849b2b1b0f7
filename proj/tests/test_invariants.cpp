#include "error.hpp"
#include "helpers.hpp"
#include "invariants.hpp"
#include "symplectic.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using symq::counting_invariant;
using symq::enumerate_colorings;
using symq::Error;
using symq::Gram;
using symq::Module;
using symq::parse_gauss;
using symq::Presentation;
using symq::Quandle;
using symq::Ring;
using symq::Vec;
using testing::cyclic3;
using testing::presentation_of;
using testing::trivial_quandle;

namespace {

const char* kTrefoil = "O1+U2+O3+U1+O2+U3+";
const char* kHopf = "O1+U2+,O2+U1+";
const char* kFigureEight = "O1+U2+O3-U4-U1+O2+U3-O4-";

Quandle symplectic_target(const std::string& ring_spec, int dim, const std::string& gram) {
    Ring ring = Ring::parse(ring_spec);
    return symq::build_symplectic(symq::SymplecticSpace(ring, dim, Gram::parse(ring, gram)));
}

} // namespace

TEST_CASE("coloring enumeration") {
    SUBCASE("unknot takes any single color") {
        auto cols = enumerate_colorings(presentation_of(""), cyclic3());
        CHECK(cols == std::vector<std::vector<int>>{{1}, {2}, {3}});
    }

    SUBCASE("trefoil counts") {
        CHECK(counting_invariant(presentation_of(kTrefoil), cyclic3()) == 9);
        for (int n = 1; n <= 4; ++n)
            CHECK(counting_invariant(presentation_of(kTrefoil), trivial_quandle(n)) == n);
    }

    SUBCASE("hopf link counts") {
        CHECK(counting_invariant(presentation_of(kHopf), cyclic3()) == 3);
        for (int n = 1; n <= 4; ++n)
            CHECK(counting_invariant(presentation_of(kHopf), trivial_quandle(n)) ==
                  static_cast<long long>(n) * n);
    }

    SUBCASE("colorings satisfy every relation and come sorted") {
        for (const char* code : {kTrefoil, kHopf, kFigureEight, "O1+U1+", ","}) {
            Presentation pres = presentation_of(code);
            for (const Quandle& target :
                 {cyclic3(), trivial_quandle(3),
                  symplectic_target("Z2", 2, "0,1;1,0")}) {
                auto cols = enumerate_colorings(pres, target);
                CHECK(std::is_sorted(cols.begin(), cols.end()));
                CHECK(std::set<std::vector<int>>(cols.begin(), cols.end()).size() ==
                      cols.size());
                for (const auto& f : cols) {
                    REQUIRE(static_cast<int>(f.size()) == pres.generators);
                    for (const auto& rel : pres.relations)
                        CHECK(testing::satisfies(target, rel, f));
                }
            }
        }
    }

    SUBCASE("agrees with the exhaustive sweep") {
        std::vector<const char*> codes{kTrefoil, kHopf, kFigureEight, "O1-U2-,O2-U1-",
                                       "O1+,U1+"};
        std::vector<Quandle> targets{cyclic3(), trivial_quandle(2),
                                     testing::five_element_example(),
                                     symplectic_target("Z2", 2, "0,1;1,0"),
                                     symplectic_target("Z4", 2, "0,2;2,0")};
        for (const char* code : codes)
            for (const Quandle& target : targets) {
                Presentation pres = presentation_of(code);
                CHECK(enumerate_colorings(pres, target) ==
                      testing::naive_colorings(pres, target));
            }
    }

    SUBCASE("bad generator indices are rejected") {
        Presentation broken{1, {{1, 2, 1, 1}}};
        CHECK_THROWS_AS(enumerate_colorings(broken, cyclic3()), Error);
    }
}

TEST_CASE("image-size polynomial") {
    SUBCASE("trefoil over the three-element cyclic quandle") {
        CHECK(symq::phi_e(presentation_of(kTrefoil), cyclic3()).to_string() ==
              "6q^3 + 3q");
    }

    SUBCASE("unknot lists point subquandles") {
        CHECK(symq::phi_e(presentation_of(""), trivial_quandle(4)).to_string() == "4q");
    }

    SUBCASE("trefoil over the 16-element characteristic-2 table") {
        Quandle mv = testing::load_fixture_quandle("mv.txt");
        Presentation trefoil = presentation_of(kTrefoil);
        CHECK(counting_invariant(trefoil, mv) == 136);
        CHECK(symq::phi_e(trefoil, mv).to_string() == "120q^3 + 16q");
    }

    SUBCASE("two-component unlink closes the two-color images") {
        // colorings by two distinct cyclic colors generate the whole quandle
        CHECK(symq::phi_e(presentation_of(","), cyclic3()).to_string() ==
              "6q^3 + 3q");
        // over a trivial target two distinct colors stay a two-element image
        CHECK(symq::phi_e(presentation_of(","), trivial_quandle(2)).to_string() ==
              "2q^2 + 2q");
    }

    SUBCASE("specializing q to 1 recovers the count") {
        for (const char* code : {kTrefoil, kHopf, ""})
            for (const Quandle& target : {cyclic3(), trivial_quandle(3)}) {
                Presentation pres = presentation_of(code);
                CHECK(symq::phi_e(pres, target).specialize("q", 1).constant_value() ==
                      counting_invariant(pres, target));
            }
    }
}

TEST_CASE("colorings onto a fixed subquandle") {
    Presentation trefoil = presentation_of(kTrefoil);
    CHECK(symq::surjective_hom_count(trefoil, cyclic3(), {1, 2, 3}) == 6);
    CHECK(symq::surjective_hom_count(trefoil, cyclic3(), {1}) == 1);
    // a constant coloring is never onto two or more elements
    CHECK(symq::surjective_hom_count(presentation_of(""), cyclic3(), {1, 2, 3}) == 0);
    CHECK(symq::surjective_hom_count(trefoil, trivial_quandle(2), {1, 2}) == 0);
    CHECK_THROWS_AS(symq::surjective_hom_count(trefoil, cyclic3(), {1, 2}), Error);

    SUBCASE("sums to the counting invariant over all subquandles") {
        Quandle target = testing::five_element_example();
        long long total = 0;
        for (const auto& s : target.subquandles())
            total += symq::surjective_hom_count(trefoil, target, s);
        CHECK(total == counting_invariant(trefoil, target));
    }
}

TEST_CASE("assembling the polynomial from subquandles gives the same answer") {
    std::vector<std::pair<const char*, Quandle>> cases;
    cases.emplace_back(kTrefoil, cyclic3());
    cases.emplace_back(kTrefoil, testing::load_fixture_quandle("mv.txt"));
    cases.emplace_back(kHopf, cyclic3());
    cases.emplace_back(",", cyclic3());
    cases.emplace_back(kHopf, testing::apply_errata(
                                  testing::load_fixture_quandle("mvdoubleprime.txt"),
                                  testing::load_errata("mvdoubleprime_errata.txt")));
    for (const auto& [code, target] : cases) {
        Presentation pres = presentation_of(code);
        CHECK(symq::phi_e(pres, target) == symq::phi_e_decomposed(pres, target));
    }
}

TEST_CASE("submodule span sizes") {
    Module z4sq(Ring::modular(4), 2);
    CHECK(symq::submodule_span(z4sq, {}) == 1);
    CHECK(symq::submodule_span(z4sq, {Vec{0, 0}}) == 1);
    CHECK(symq::submodule_span(z4sq, {Vec{2, 0}}) == 2);
    CHECK(symq::submodule_span(z4sq, {Vec{1, 0}}) == 4);
    CHECK(symq::submodule_span(z4sq, {Vec{1, 0}, Vec{0, 2}}) == 8);
    CHECK(symq::submodule_span(z4sq, {Vec{1, 0}, Vec{0, 1}}) == 16);

    Module gf4sq(Ring::parse("GF(2^2)"), 2);
    CHECK(symq::submodule_span(gf4sq, {Vec{1, 0}}) == 4);
    CHECK(symq::submodule_span(gf4sq, {Vec{2, 0}}) == 4); // t spans the same line
    CHECK(symq::submodule_span(gf4sq, {Vec{1, 1}, Vec{0, 1}}) == 16);

    SUBCASE("span size divides the module order") {
        Module m(Ring::modular(6), 2);
        for (int i = 1; i <= 36; ++i) {
            long long n = symq::submodule_span(m, {m.vector_of(i)});
            CHECK(36 % n == 0);
        }
    }
}

TEST_CASE("two-variable polynomial over symplectic targets") {
    SUBCASE("unknot formula through small parameter triples") {
        CHECK(symq::phi_sqp(presentation_of(""), symplectic_target("Z2", 2, "0,1;1,0"))
                  .to_string() == "3qz^2 + qz");
        CHECK(symq::phi_sqp(presentation_of(""), symplectic_target("Z3", 2, "0,1;-1,0"))
                  .to_string() == "8qz^3 + qz");
        CHECK(symq::phi_sqp(presentation_of(""),
                            symplectic_target("GF(2^2)/t^2+t+1", 2, "0,1;1,0"))
                  .to_string() == "15qz^4 + qz");
    }

    SUBCASE("trefoil over the nine-element symplectic quandle") {
        CHECK(symq::phi_sqp(presentation_of(kTrefoil),
                            symplectic_target("Z3", 2, "0,1;-1,0"))
                  .to_string() == "8qz^3 + qz");
    }

    SUBCASE("trefoil over the 81-element planes, all colorings constant") {
        Quandle plane = symplectic_target("GF(3^2)", 2, "0,1;-1,0");
        Presentation trefoil = presentation_of(kTrefoil);
        CHECK(counting_invariant(trefoil, plane) == 81);
        CHECK(symq::phi_e(trefoil, plane).to_string() == "81q");
        CHECK(symq::phi_sqp(trefoil, plane).to_string() == "80qz^9 + qz");

        Ring z3 = Ring::modular(3);
        Quandle big = symq::build_symplectic(
            symq::SymplecticSpace(z3, 4,
                                  Gram::parse(z3, "0,1,0,0;-1,0,0,0;0,0,0,1;0,0,-1,0")),
            100);
        CHECK(counting_invariant(trefoil, big) == 81);
    }

    SUBCASE("setting z to 1 recovers the image-size polynomial") {
        for (const char* code : {kTrefoil, kHopf, ","}) {
            Presentation pres = presentation_of(code);
            Quandle target = symplectic_target("Z4", 2, "0,2;2,0");
            CHECK(symq::phi_sqp(pres, target).specialize("z", 1) ==
                  symq::phi_e(pres, target));
        }
    }

    SUBCASE("requires a module-backed target") {
        CHECK_THROWS_AS(symq::phi_sqp(presentation_of(""), cyclic3()), Error);
    }
}
