#include "doctest.h"

#include <algorithm>
#include <set>

#include "bochvar/algebra.hpp"
#include "bochvar/fixtures.hpp"
#include "test_helpers.hpp"

using namespace bochvar;
using namespace bochvar::fixtures;

TEST_CASE("validate_algebra accepts the three-valued fixture and the trivial algebra") {
    CHECK(validate_algebra(wke().to_data()).empty());
    CHECK(validate_algebra(trivial().to_data()).empty());
}

TEST_CASE("validate_algebra flags an unknown element in a single cell") {
    AlgebraData d = wke().to_data();
    d.or_table[1][2] = "mystery";
    auto report = validate_algebra(d);
    REQUIRE(report.size() == 1);
    CHECK(report[0].find("or[half,1]") != std::string::npos);
    CHECK(report[0].find("mystery") != std::string::npos);
}

TEST_CASE("validate_algebra reports missing rows and bad constants") {
    AlgebraData d = b2().to_data();
    d.and_table.pop_back();
    d.zero = "zero";
    auto report = validate_algebra(d);
    CHECK(report.size() == 2);
}

TEST_CASE("direct product of B2 with itself is the four-element Boolean algebra") {
    FiniteAlgebra p = direct_product(b2(), b2());
    CHECK(p.size() == 4);
    CHECK(find_isomorphism(p, bool4().view()).has_value());
}

TEST_CASE("direct product with the trivial factor changes nothing") {
    FiniteAlgebra p = direct_product(b2(), trivial_reduct());
    CHECK(find_isomorphism(p, b2()).has_value());
}

TEST_CASE("product projections are homomorphisms and sizes multiply") {
    FiniteAlgebra p = direct_product(wke(), b2e());
    CHECK(p.size() == wke().size() * b2e().size());
    CHECK_FALSE(product_projection(p, wke(), b2e(), 0).check().has_value());
    CHECK_FALSE(product_projection(p, wke(), b2e(), 1).check().has_value());
}

TEST_CASE("product of algebras with different signatures is rejected") {
    CHECK_THROWS_AS(direct_product(wke(), b2()), error);
}

TEST_CASE("subuniverse generation") {
    auto names = [&](const std::vector<int>& ids) {
        std::vector<std::string> out;
        for (int i : ids) out.push_back(wke().element(i));
        return out;
    };
    CHECK(names(subuniverse_generated(wke(), {})) == std::vector<std::string>{"0", "1"});
    CHECK(names(subuniverse_generated(wke(), {wke().index_of("half")})) ==
          std::vector<std::string>{"0", "half", "1"});
    CHECK(subuniverse_generated(b2(), {0, 1}).size() == 2);
}

TEST_CASE("hom enumeration counts") {
    CHECK(enumerate_homs(wke(), wke()).size() == 1);  // negation fixes half, constants the rest
    CHECK(enumerate_homs(b2(), b2()).size() == 1);
    CHECK(enumerate_homs(bool4().view(), b2()).size() == 2);  // one per atom
    for (const auto& h : enumerate_homs(bool4().view(), b2())) CHECK_FALSE(h.check().has_value());
}

TEST_CASE("isomorphism search") {
    CHECK(find_isomorphism(bool4().view(), direct_product(b2(), b2())).has_value());
    CHECK_FALSE(find_isomorphism(wk(), b2()).has_value());  // carrier sizes differ
    auto id = find_isomorphism(wke(), wke());
    REQUIRE(id.has_value());
    for (int i = 0; i < wke().size(); ++i) CHECK(id->map[i] == i);
}

TEST_CASE("isomorphism is symmetric and matches bijective homomorphisms") {
    FiniteAlgebra p = direct_product(b2(), b2());
    auto fwd = find_isomorphism(bool4().view(), p);
    auto bwd = find_isomorphism(p, bool4().view());
    REQUIRE(fwd.has_value());
    REQUIRE(bwd.has_value());
    CHECK_FALSE(fwd->inverse().check().has_value());

    // agreement with enumerate_homs filtered to bijections
    int bijective = 0;
    for (const auto& h : enumerate_homs(bool4().view(), p))
        if (h.is_bijective() && !h.inverse().check().has_value()) ++bijective;
    CHECK(bijective > 0);
}

TEST_CASE("principal congruences of the three-valued algebra") {
    const FiniteAlgebra& a = wke();
    Partition c = principal_congruence(a, a.index_of("0"), a.index_of("1"));
    CHECK(partition_to_string(a, c) == "{{0,1},{half}}");
    CHECK(is_congruence(a, c));

    Partition diag = principal_congruence(a, 1, 1);
    CHECK(diag.is_identity());

    Partition all = principal_congruence(b2(), 0, 1);
    CHECK(all.is_universal());
}

TEST_CASE("all_congruences matches the brute-force partition oracle") {
    for (const FiniteAlgebra* a : {&wke(), &wk(), &b2(), &sl2(), &bool4().view(), &b2e(), &sl2e()}) {
        auto fast = all_congruences(*a);
        auto slow = bochvar::testing::brute_force_congruences(*a);
        std::set<Partition> fast_set(fast.begin(), fast.end());
        std::set<Partition> slow_set(slow.begin(), slow.end());
        CHECK(fast_set == slow_set);
    }
}

TEST_CASE("congruence lattice of the three-valued algebra is a 3-chain") {
    auto cs = all_congruences(wke());
    REQUIRE(cs.size() == 3);
    CHECK(cs[0].is_identity());
    CHECK(partition_to_string(wke(), cs[1]) == "{{0,1},{half}}");
    CHECK(cs[2].is_universal());
    CHECK(cs[0].refines(cs[1]));
    CHECK(cs[1].refines(cs[2]));
}

TEST_CASE("all_congruences of the trivial algebra") {
    auto cs = all_congruences(trivial());
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].is_identity());
    CHECK(cs[0].is_universal());
}

TEST_CASE("every reported congruence is compatible with every operation") {
    for (const FiniteAlgebra* a : {&wke(), &bool4().view(), &sl2e()})
        for (const auto& c : all_congruences(*a)) CHECK(is_congruence(*a, c));
}

TEST_CASE("subdirect irreducibility") {
    auto wke_si = is_subdirectly_irreducible(wke());
    CHECK(wke_si.irreducible);
    CHECK(partition_to_string(wke(), *wke_si.monolith) == "{{0,1},{half}}");

    auto b2_si = is_subdirectly_irreducible(b2());
    CHECK(b2_si.irreducible);
    CHECK(b2_si.monolith->is_universal());

    CHECK_FALSE(is_subdirectly_irreducible(bool4().view()).irreducible);
    CHECK_THROWS_AS(is_subdirectly_irreducible(trivial()), error);
}

TEST_CASE("quotient by the half-collapsing congruence is a two-element semilattice") {
    const FiniteAlgebra& a = wke();
    Partition c = principal_congruence(a, a.index_of("0"), a.index_of("1"));
    Quotient q = quotient_algebra(a, c);
    CHECK(q.algebra.size() == 2);
    CHECK(q.algebra.elements() == std::vector<std::string>{"0", "half"});
    CHECK(q.algebra.zero() == q.algebra.one());  // 0 and 1 collapsed
    CHECK(find_isomorphism(q.algebra, sl2e()).has_value());
    CHECK_FALSE(q.projection.check().has_value());
}

TEST_CASE("quotient by identity and by the universal congruence") {
    auto same = quotient_algebra(bool4().view(), Partition::identity(4));
    CHECK(find_isomorphism(same.algebra, bool4().view()).has_value());
    auto collapsed = quotient_algebra(bool4().view(), Partition::universal(4));
    CHECK(collapsed.algebra.size() == 1);
}

TEST_CASE("quotient rejects incompatible partitions") {
    // {0,half} vs {1} is not a congruence of the three-valued algebra
    Partition bad = Partition::from_blocks(3, {{0, 1}, {2}});
    CHECK_THROWS_AS(quotient_algebra(wke(), bad), error);
}

TEST_CASE("quotients by principal congruences identify exactly the forced pairs") {
    const FiniteAlgebra& a = bool4().view();
    for (int x = 0; x < a.size(); ++x)
        for (int y = x + 1; y < a.size(); ++y) {
            Partition c = principal_congruence(a, x, y);
            CHECK(c.same(x, y));
            // least: every congruence containing (x,y) contains c
            for (const auto& d : all_congruences(a))
                if (d.same(x, y)) CHECK(c.refines(d));
        }
}

TEST_CASE("subalgebra restriction round-trips through subuniverse generation") {
    const FiniteAlgebra& a = wke();
    auto u = subuniverse_generated(a, {a.index_of("half")});
    FiniteAlgebra sub = subalgebra(a, u);
    CHECK(sub.size() == 3);
    CHECK(sub.same_tables(a));
    CHECK_THROWS_AS(subalgebra(a, std::vector<int>{a.index_of("0")}), error);
}

TEST_CASE("renaming preserves structure") {
    FiniteAlgebra renamed = wke().renamed({{"half", "n"}});
    CHECK(renamed.try_index("n").has_value());
    CHECK(find_isomorphism(renamed, wke()).has_value());
}
