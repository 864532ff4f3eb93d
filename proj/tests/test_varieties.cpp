#include "doctest.h"

#include <set>

#include "bochvar/equivalence.hpp"
#include "bochvar/fixtures.hpp"
#include "bochvar/varieties.hpp"

using namespace bochvar;
using namespace bochvar::fixtures;

namespace {
FiniteAlgebra b4e() { return bool4().view().with_j2({0, 1, 2, 3}, "B4e"); }
}  // namespace

TEST_CASE("the forced extension of the three-valued reduct is exactly the generator") {
    JdefResult r = jdef_extension(wk());
    REQUIRE(r.forced());
    CHECK(r.algebra->same_tables(wke()));
}

TEST_CASE("the forced extension of B2 is the identity table") {
    JdefResult r = jdef_extension(b2());
    REQUIRE(r.forced());
    for (int i = 0; i < 2; ++i) CHECK(r.algebra->j2(i) == i);
}

TEST_CASE("the forbidden configuration defeats the forced extension at K10") {
    JdefResult r = jdef_extension(forb());
    CHECK_FALSE(r.forced());
    CHECK(r.failed_axiom == "K10");
}

TEST_CASE("jdef refuses large bottom fibres and non-bisemilattices") {
    CHECK_THROWS_AS(jdef_extension(bool4().view()), error);  // bottom fibre has 4 elements
    CHECK_THROWS_AS(jdef_extension(wke()), error);           // not J2-free
}

TEST_CASE("forbidden_search returns nothing for the forbidden configuration") {
    CHECK(forbidden_search(forb()).empty());
    CHECK(forbidden_search(forb(), /*literal_k9_sweep=*/true).empty());
    CHECK(k9_search_space(forb()) == 128);  // two complemented elements, seven slots
}

TEST_CASE("forbidden_search finds exactly the forced table when one exists") {
    auto wk_tables = forbidden_search(wk());
    REQUIRE(wk_tables.size() == 1);
    CHECK(wk_tables[0].same_tables(wke()));

    auto b2_tables = forbidden_search(b2());
    REQUIRE(b2_tables.size() == 1);
    for (int i = 0; i < 2; ++i) CHECK(b2_tables[0].j2(i) == i);
}

TEST_CASE("the pruned search agrees with the literal K9 sweep on small inputs") {
    for (const FiniteAlgebra* a : {&wk(), &b2(), &sl2(), &forb()}) {
        auto pruned = enumerate_j2_tables(*a, AxiomSetName::K, false);
        auto literal = enumerate_j2_tables(*a, AxiomSetName::K, true);
        CHECK(pruned == literal);
    }
    CHECK(enumerate_j2_tables(wk(), AxiomSetName::BCA, false) ==
          enumerate_j2_tables(wk(), AxiomSetName::BCA, true));
}

TEST_CASE("semilattices admit exactly the constant-zero table") {
    auto tables = enumerate_j2_tables(sl2(), AxiomSetName::K, true);
    REQUIRE(tables.size() == 1);
    CHECK(tables[0] == std::vector<int>{0, 0});
}

TEST_CASE("BCA-table uniqueness on constructed reducts") {
    for (const char* members : {"1", "p", "0"}) {
        (void)members;
    }
    SystemAlgebra six = system_to_algebra(make_bochvar_system(bool4(), {"1", "p"}));
    auto tables = enumerate_j2_tables(six.algebra.reduct(), AxiomSetName::BCA);
    REQUIRE(tables.size() == 1);
    for (int i = 0; i < six.algebra.size(); ++i) CHECK(tables[0][i] == six.algebra.j2(i));
}

TEST_CASE("theta congruences on the generator") {
    const FiniteAlgebra& a = wke();
    CHECK(theta_a(a, a.index_of("0")).is_identity());
    Partition at_one = theta_a(a, a.index_of("1"));
    CHECK(partition_to_string(a, at_one) == "{{0,1},{half}}");
    CHECK(at_one == fibre_congruence(a));
    CHECK_THROWS_AS(theta_a(a, a.index_of("half")), error);  // not in the bottom fibre
}

TEST_CASE("theta on the four-element Boolean algebra with identity J2") {
    FiniteAlgebra a = b4e();
    Partition at_p = theta_a(a, a.index_of("p"));
    CHECK(partition_to_string(a, at_p) == "{{0,p},{q,p+q}}");

    // brute-force pair check oracle for the defining relation
    for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < a.size(); ++y) {
            int g = a.index_of("p");
            bool related = a.join(g, x) == a.join(g, y) && a.join(g, a.neg(x)) == a.join(g, a.neg(y));
            CHECK(related == at_p.same(x, y));
        }
}

TEST_CASE("theta is trivial exactly at zero, and complementary thetas intersect trivially") {
    SystemAlgebra six = system_to_algebra(make_bochvar_system(bool4(), {"1", "p"}));
    const FiniteAlgebra& six_alg = six.algebra;
    for (const FiniteAlgebra* a : {&wke(), &six_alg}) {
        Decomposition d = decompose(a->reduct());
        for (int g = 0; g < a->size(); ++g) {
            if (d.fibre_of[g] != d.system.bottom()) continue;
            Partition t = theta_a(*a, g);
            CHECK(t.is_identity() == (g == a->zero()));
            Partition tn = theta_a(*a, a->neg(g));
            CHECK(t.meet_with(tn).is_identity());
        }
    }
}

TEST_CASE("fibre congruence blocks are the decomposition fibres") {
    CHECK(partition_to_string(wke(), fibre_congruence(wke())) == "{{0,1},{half}}");
    // one fibre: everything is related
    CHECK(fibre_congruence(b4e()).is_universal());
    CHECK(fibre_congruence(sl2e()).is_identity());  // two singleton fibres
}

TEST_CASE("HS classification hits all four classes and rejects others") {
    CHECK(hs_wke_classify(wke()) == HsClass::wke);
    CHECK(hs_wke_classify(b2e()) == HsClass::b2);
    CHECK(hs_wke_classify(sl2e()) == HsClass::sl2);
    CHECK(hs_wke_classify(trivial()) == HsClass::trivial);
    CHECK(hs_wke_classify(b4e()) == HsClass::none);
    CHECK(hs_wke_classify(wk()) == HsClass::wke);  // reduct comparison path

    Quotient q = quotient_algebra(wke(), principal_congruence(wke(), 0, 2));
    CHECK(hs_wke_classify(q.algebra) == HsClass::sl2);
}

TEST_CASE("quasivariety membership: generator and constructed members") {
    IspResult direct = isp_wke_check(wke());
    CHECK(direct.member());
    CHECK(direct.agree());
    CHECK(direct.power == 1);  // only the identity endomorphism

    SystemAlgebra six = system_to_algebra(make_bochvar_system(bool4(), {"1", "p"}));
    IspResult built = isp_wke_check(six.algebra);
    CHECK(built.member());
    CHECK(built.agree());
    CHECK(built.power >= 1);
    // the separating family really is a family of homomorphisms
    for (const auto& m : built.separating_maps)
        CHECK_FALSE(Homomorphism{six.algebra, wke(), m}.check().has_value());
}

TEST_CASE("quasivariety membership: non-members fail both routes") {
    IspResult sl = isp_wke_check(sl2e());
    CHECK_FALSE(sl.basis_pass);
    CHECK_FALSE(sl.embeds);
    CHECK(sl.agree());

    // an arbitrary K9-shaped expansion of the forbidden configuration
    FiniteAlgebra guess = forb().with_j2(std::vector<int>(forb().size(), forb().zero()), "FORB+0");
    IspResult f = isp_wke_check(guess);
    CHECK_FALSE(f.basis_pass);
    CHECK(f.agree());
}

TEST_CASE("isp bound is enforced and the trivial algebra is a member") {
    CHECK_THROWS_AS(isp_wke_check(b4e(), 2), error);
    IspResult t = isp_wke_check(trivial());
    CHECK(t.member());
    CHECK(t.power == 0);  // embeds into the empty power
}

TEST_CASE("open and dense elements of the fixtures") {
    auto names = [](const FiniteAlgebra& a, const std::vector<int>& xs) {
        std::vector<std::string> out;
        for (int x : xs) out.push_back(a.element(x));
        return out;
    };
    CHECK(names(wke(), open_elements(wke())) == std::vector<std::string>{"0", "1"});
    CHECK(names(wke(), dense_elements(wke())) == std::vector<std::string>{"0", "half"});
    CHECK(names(sl2e(), open_elements(sl2e())) == std::vector<std::string>{"0"});
    CHECK(names(sl2e(), dense_elements(sl2e())) == std::vector<std::string>{"0", "e"});
    CHECK(names(b2e(), dense_elements(b2e())) == std::vector<std::string>{"0"});
    CHECK(open_elements(b2e()).size() == 2);
}

TEST_CASE("open/dense decomposition embeds members of V") {
    ODDecomposition mix = od_embedding(direct_product(b2e(), sl2e()));
    CHECK(mix.onto);  // four elements onto a 2x2 product
    CHECK(mix.open_part.size() == 2);
    CHECK(mix.dense_part.size() == 2);

    ODDecomposition bool_only = od_embedding(b2e());
    CHECK(bool_only.open_part.size() == 2);
    CHECK(bool_only.dense_part.size() == 1);
    CHECK(bool_only.onto);

    ODDecomposition sl_only = od_embedding(sl2e());
    CHECK(sl_only.open_part.size() == 1);
    CHECK(sl_only.dense_part.size() == 2);
    CHECK(sl_only.onto);

    ODDecomposition big = od_embedding(direct_product(b4e(), sl_chain(3)));
    CHECK(big.embedding.source.size() == 12);
    CHECK_FALSE(big.embedding.check().has_value());
}

TEST_CASE("the generator is rejected by the open/dense embedding precondition") {
    CHECK_THROWS_AS(od_embedding(wke()), error);
}

TEST_CASE("independence witness evaluates to the correct projection") {
    IndependenceResult ba = independence_check(b2e());
    CHECK(ba.boolean_side);
    CHECK(ba.holds);

    IndependenceResult ba4 = independence_check(b4e());
    CHECK(ba4.boolean_side);
    CHECK(ba4.holds);

    IndependenceResult sl = independence_check(sl2e());
    CHECK_FALSE(sl.boolean_side);
    CHECK(sl.holds);

    IndependenceResult sl4 = independence_check(sl_diamond());
    CHECK_FALSE(sl4.boolean_side);
    CHECK(sl4.holds);

    CHECK_THROWS_AS(independence_check(wke()), error);
}

TEST_CASE("four-element members of V factor into a Boolean and a semilattice part") {
    FiniteAlgebra p = direct_product(b2e(), sl2e());
    ODDecomposition od = od_embedding(p);
    REQUIRE(od.onto);
    CHECK(passes(od.open_part, AxiomSetName::BA_rel));
    CHECK(passes(od.dense_part, AxiomSetName::SL_rel));
    CHECK(find_isomorphism(p, direct_product(od.open_part, od.dense_part)).has_value());
}
