#include "doctest.h"

#include <set>

#include "bochvar/axioms.hpp"
#include "bochvar/equivalence.hpp"
#include "bochvar/fixtures.hpp"

using namespace bochvar;
using namespace bochvar::fixtures;

namespace {

std::vector<BochvarSystem> systems_over(const BooleanAlgebra& b) {
    std::vector<BochvarSystem> out;
    for (const auto& members : enumerate_unit_meet_subsemilattices(b))
        out.push_back(BochvarSystem{b, members});
    return out;
}

}  // namespace

TEST_CASE("system validation") {
    CHECK(validate_bochvar_system(make_bochvar_system(bool4(), {"1", "p"})).empty());
    BochvarSystem no_one{bool4(), {0}};
    CHECK_FALSE(validate_bochvar_system(no_one).empty());
    BochvarSystem not_closed{bool4(), {bool4().index_of("p"), bool4().index_of("q"), bool4().full()}};
    CHECK_FALSE(validate_bochvar_system(not_closed).empty());
    CHECK_THROWS_AS(make_bochvar_system(bool4(), {"p", "q", "1"}), error);
}

TEST_CASE("the full system over B2 builds the three-valued generator") {
    SystemAlgebra sa = system_to_algebra(make_bochvar_system(bool2(), {"0", "1"}));
    CHECK(sa.algebra.size() == 3);
    CHECK(passes(sa.algebra, AxiomSetName::BCA));
    CHECK(find_isomorphism(sa.algebra, wke()).has_value());
}

TEST_CASE("the unit-only system over B4 is Boolean with identity J2") {
    SystemAlgebra sa = system_to_algebra(make_bochvar_system(bool4(), {"1"}));
    CHECK(sa.algebra.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(sa.algebra.j2(i) == i);
    CHECK(passes(sa.algebra, AxiomSetName::BA_rel));
}

TEST_CASE("the system <B4,{1,p}> gives a six-element algebra with the expected J2") {
    SystemAlgebra sa = system_to_algebra(make_bochvar_system(bool4(), {"1", "p"}));
    CHECK(sa.algebra.size() == 6);
    CHECK(passes(sa.algebra, AxiomSetName::BCA));
    // the top of the quotient fibre at p lifts back to p itself
    int p_mask = bool4().index_of("p");
    int fibre_top = sa.locate(p_mask, bool4().full());
    int expected = sa.locate(bool4().full(), p_mask);
    CHECK(sa.algebra.j2(fibre_top) == expected);
    CHECK(sa.algebra.element(expected) == "p+q:p");
}

TEST_CASE("trivial Boolean part still builds (everything collapses)") {
    BooleanAlgebra b0 = BooleanAlgebra::from_atoms({});
    SystemAlgebra sa = system_to_algebra(BochvarSystem{b0, {0}});
    CHECK(sa.algebra.size() == 1);
    CHECK(passes(sa.algebra, AxiomSetName::BCA));
}

TEST_CASE("recovering the system from the three-valued generator") {
    AlgebraSystem gamma = algebra_to_system(wke());
    CHECK(gamma.system.boolean.size() == 2);
    CHECK(gamma.system.subsemilattice == std::vector<int>{0, 1});  // {0,1}
}

TEST_CASE("recovering the system from a Boolean algebra with identity J2") {
    SystemAlgebra built = system_to_algebra(make_bochvar_system(bool4(), {"1"}));
    AlgebraSystem gamma = algebra_to_system(built.algebra);
    CHECK(gamma.system.boolean.size() == 4);
    CHECK(gamma.system.subsemilattice == std::vector<int>{gamma.system.boolean.full()});
}

TEST_CASE("algebra_to_system rejects non-members with a named axiom") {
    CHECK_THROWS_WITH_AS(algebra_to_system(sl2e()), doctest::Contains("not a Bochvar algebra"),
                         error);
    CHECK_THROWS_AS(algebra_to_system(wk()), error);  // no J2
}

TEST_CASE("round trip through the system recovers <B4,{1,p}> up to isomorphism") {
    SystemAlgebra built = system_to_algebra(make_bochvar_system(bool4(), {"1", "p"}));
    AlgebraSystem gamma = algebra_to_system(built.algebra);
    CHECK(gamma.system.boolean.size() == 4);
    CHECK(gamma.system.subsemilattice.size() == 2);
    SystemRoundTrip rt = roundtrip_system(make_bochvar_system(bool4(), {"1", "p"}));
    CHECK(rt.iso.has_value());
}

TEST_CASE("algebra round trips on the fixtures") {
    for (const FiniteAlgebra* a : {&wke(), &b2e(), &trivial()}) {
        AlgebraRoundTrip rt = roundtrip_algebra(*a);
        CHECK(rt.iso.has_value());
        CHECK(passes(rt.rebuilt.algebra, AxiomSetName::BCA));
    }
}

TEST_CASE("round trips and BCA membership over every system with at most two atoms") {
    for (const BooleanAlgebra* b :
         {&bool2(), &bool4()}) {
        for (const auto& s : systems_over(*b)) {
            SystemAlgebra sa = system_to_algebra(s);
            CHECK(passes(sa.algebra, AxiomSetName::BCA));

            AlgebraRoundTrip art = roundtrip_algebra(sa.algebra);
            CHECK(art.iso.has_value());

            SystemRoundTrip srt = roundtrip_system(s);
            CHECK(srt.iso.has_value());

            // the canonical map agrees with the searched one in being an iso
            AlgebraSystem gamma = algebra_to_system(sa.algebra);
            SystemAlgebra rebuilt = system_to_algebra(gamma.system);
            Homomorphism canonical = canonical_roundtrip_iso(sa.algebra, gamma, rebuilt);
            CHECK(canonical.is_bijective());
        }
    }
    BooleanAlgebra b0 = BooleanAlgebra::from_atoms({});
    for (const auto& s : systems_over(b0)) CHECK(roundtrip_system(s).iso.has_value());
}

TEST_CASE("the recovered subsemilattice is meet closed and contains 1") {
    for (const auto& s : systems_over(bool4())) {
        AlgebraSystem gamma = algebra_to_system(system_to_algebra(s).algebra);
        CHECK(validate_bochvar_system(gamma.system).empty());
    }
}

TEST_CASE("system morphism validation") {
    BochvarSystem s1 = make_bochvar_system(bool4(), {"1", "p"});
    BochvarSystem s2 = make_bochvar_system(bool2(), {"0", "1"});
    // evaluation at the p-atom: p -> 1, q -> 0
    std::vector<int> eval_p(4);
    for (int mask = 0; mask < 4; ++mask) eval_p[mask] = (mask & 1) ? 1 : 0;
    SystemMorphism good{s1, s2, eval_p};
    CHECK_FALSE(good.check().has_value());

    // evaluation at the q-atom sends the member p to 0; with a target
    // subsemilattice of just {1} that falls outside
    BochvarSystem tight = make_bochvar_system(bool2(), {"1"});
    std::vector<int> eval_q(4);
    for (int mask = 0; mask < 4; ++mask) eval_q[mask] = (mask & 2) ? 1 : 0;
    SystemMorphism bad{s1, tight, eval_q};
    CHECK(bad.check().has_value());
}

TEST_CASE("xi of an evaluation morphism maps the six-element algebra onto the generator") {
    BochvarSystem s1 = make_bochvar_system(bool4(), {"1", "p"});
    BochvarSystem s2 = make_bochvar_system(bool2(), {"0", "1"});
    std::vector<int> eval_p(4);
    for (int mask = 0; mask < 4; ++mask) eval_p[mask] = (mask & 1) ? 1 : 0;
    SystemMorphism g{s1, s2, eval_p};

    SystemAlgebra sa1 = system_to_algebra(s1);
    SystemAlgebra sa2 = system_to_algebra(s2);
    Homomorphism h = xi_morphism(g, sa1, sa2);
    CHECK(h.source.size() == 6);
    CHECK(h.target.size() == 3);
    CHECK_FALSE(h.check().has_value());
}

TEST_CASE("gamma of the identity is the identity system morphism") {
    AlgebraSystem gamma = algebra_to_system(wke());
    std::vector<int> id(wke().size());
    for (int i = 0; i < wke().size(); ++i) id[i] = i;
    SystemMorphism g = gamma_morphism(Homomorphism{wke(), wke(), id}, gamma, gamma);
    for (int mask = 0; mask < gamma.system.boolean.size(); ++mask) CHECK(g.map[mask] == mask);
}

TEST_CASE("functor laws on the |B| <= 4 morphism corpus") {
    std::vector<BochvarSystem> corpus;
    BooleanAlgebra b0 = BooleanAlgebra::from_atoms({});
    for (const auto& s : systems_over(b0)) corpus.push_back(s);
    for (const auto& s : systems_over(bool2())) corpus.push_back(s);
    for (const auto& s : systems_over(bool4())) corpus.push_back(s);
    REQUIRE(corpus.size() == 10);

    std::vector<SystemAlgebra> algebras;
    for (const auto& s : corpus) algebras.push_back(system_to_algebra(s));

    int composite_checks = 0;
    for (size_t i = 0; i < corpus.size(); ++i)
        for (size_t j = 0; j < corpus.size(); ++j) {
            auto gs = enumerate_system_morphisms(corpus[i], corpus[j]);
            for (const auto& g : gs) {
                Homomorphism xg = xi_morphism(g, algebras[i], algebras[j]);
                CHECK_FALSE(xg.check().has_value());
                // composition law against every composable partner
                for (size_t k = 0; k < corpus.size(); ++k) {
                    if (k != 0 && composite_checks > 4000) break;  // keep the suite quick
                    for (const auto& h : enumerate_system_morphisms(corpus[j], corpus[k])) {
                        std::vector<int> comp(g.map.size());
                        for (size_t m = 0; m < g.map.size(); ++m) comp[m] = h.map[g.map[m]];
                        SystemMorphism hg{corpus[i], corpus[k], comp};
                        Homomorphism lhs = xi_morphism(hg, algebras[i], algebras[k]);
                        Homomorphism xh = xi_morphism(h, algebras[j], algebras[k]);
                        for (int x = 0; x < lhs.source.size(); ++x)
                            CHECK(lhs.map[x] == xh.map[xg.map[x]]);
                        ++composite_checks;
                    }
                }
            }
        }
    CHECK(composite_checks > 0);
}

TEST_CASE("naturality: xi(gamma(f)) matches f across the canonical isomorphisms") {
    // all homomorphisms between the constructed algebras of two fixed systems
    std::vector<BochvarSystem> corpus = {make_bochvar_system(bool2(), {"0", "1"}),
                                         make_bochvar_system(bool2(), {"1"}),
                                         make_bochvar_system(bool4(), {"1", "p"}),
                                         make_bochvar_system(bool4(), {"0", "1"})};
    std::vector<SystemAlgebra> algebras;
    for (const auto& s : corpus) algebras.push_back(system_to_algebra(s));

    int checked = 0;
    for (size_t i = 0; i < corpus.size(); ++i)
        for (size_t j = 0; j < corpus.size(); ++j) {
            AlgebraSystem gi = algebra_to_system(algebras[i].algebra);
            AlgebraSystem gj = algebra_to_system(algebras[j].algebra);
            SystemAlgebra ri = system_to_algebra(gi.system);
            SystemAlgebra rj = system_to_algebra(gj.system);
            Homomorphism iso_i = canonical_roundtrip_iso(algebras[i].algebra, gi, ri);
            Homomorphism iso_j = canonical_roundtrip_iso(algebras[j].algebra, gj, rj);
            for (const auto& f : enumerate_homs(algebras[i].algebra, algebras[j].algebra)) {
                SystemMorphism gf = gamma_morphism(f, gi, gj);
                Homomorphism xf = xi_morphism(gf, ri, rj);
                // square: iso_j . f == xi(gamma(f)) . iso_i
                for (int x = 0; x < f.source.size(); ++x)
                    CHECK(iso_j.map[f.map[x]] == xf.map[iso_i.map[x]]);
                ++checked;
            }
        }
    CHECK(checked > 0);
}
