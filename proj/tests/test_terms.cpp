#include "doctest.h"

#include "bochvar/fixtures.hpp"
#include "bochvar/term.hpp"

using namespace bochvar;
using namespace bochvar::fixtures;

namespace {
Valuation val(std::initializer_list<std::pair<std::string, std::string>> xs) {
    Valuation v;
    for (auto& [k, x] : xs) v[k] = x;
    return v;
}
}  // namespace

TEST_CASE("parsing shapes") {
    TermPtr t = parse_term("J2 x | -J2 x");
    REQUIRE(t->kind == TermKind::Or);
    CHECK(t->left->kind == TermKind::J2);
    CHECK(t->right->kind == TermKind::Not);
    CHECK(t->right->left->kind == TermKind::J2);

    TermPtr u = parse_term("x & (y | z)");
    REQUIRE(u->kind == TermKind::And);
    CHECK(u->left->kind == TermKind::Var);
    CHECK(u->right->kind == TermKind::Or);
}

TEST_CASE("precedence: unary binds tighter than & which binds tighter than |") {
    CHECK(term_equal(parse_term("a & b | c"), parse_term("(a & b) | c")));
    CHECK(term_equal(parse_term("-a & b"), parse_term("(-a) & b")));
    CHECK(term_equal(parse_term("a | b | c"), parse_term("(a | b) | c")));  // left-assoc
    CHECK_FALSE(term_equal(parse_term("a | (b | c)"), parse_term("(a | b) | c")));
}

TEST_CASE("syntax errors carry a position") {
    CHECK_THROWS_WITH_AS(parse_term("x |"), doctest::Contains("position"), error);
    CHECK_THROWS_AS(parse_term("x ) y"), error);
    CHECK_THROWS_AS(parse_term("J3 x"), error);
    CHECK_THROWS_AS(parse_term(""), error);
    CHECK_THROWS_AS(parse_term("X"), error);  // variables are lowercase
}

TEST_CASE("print/parse round trip") {
    for (const char* text :
         {"J2 x | -J2 x", "x & (y | z)", "J1 x", "-(x | y) & -x", "J0 (x & y) | 1",
          "((a | b) | c) & 0", "a | (b | c)", "-  - x", "j2var & J2 j2var"}) {
        TermPtr t = parse_term(text);
        TermPtr again = parse_term(term_to_string(t));
        CHECK(term_equal(t, again));
    }
}

TEST_CASE("evaluation over the three-valued tables") {
    const FiniteAlgebra& a = wke();
    auto ev = [&](const char* t, Valuation v) { return a.element(evaluate(parse_term(t), a, v)); };
    CHECK(ev("-x", val({{"x", "half"}})) == "half");
    CHECK(ev("J2 x", val({{"x", "half"}})) == "0");
    CHECK(ev("x & y", val({{"x", "0"}, {"y", "half"}})) == "half");
    CHECK(ev("x | y", val({{"x", "1"}, {"y", "half"}})) == "half");
    CHECK(ev("0", {}) == "0");
    CHECK(ev("1", {}) == "1");
}

TEST_CASE("derived connectives match their definitions on all three values") {
    const FiniteAlgebra& a = wke();
    // fixed values: J0(0)=1, J0(half)=0, J0(1)=0; J1(0)=0, J1(half)=1, J1(1)=0
    auto ev = [&](const char* t, const std::string& x) {
        return a.element(evaluate(parse_term(t), a, val({{"x", x}})));
    };
    CHECK(ev("J0 x", "0") == "1");
    CHECK(ev("J0 x", "half") == "0");
    CHECK(ev("J0 x", "1") == "0");
    CHECK(ev("J1 x", "0") == "0");
    CHECK(ev("J1 x", "half") == "1");
    CHECK(ev("J1 x", "1") == "0");
    // desugaring agrees with direct evaluation
    for (const char* t : {"J0 (x | y)", "J1 (x & -y)", "J1 J0 x"}) {
        TermPtr sugar = parse_term(t);
        TermPtr plain = desugar(sugar);
        for (const auto& x : a.elements())
            for (const auto& y : a.elements()) {
                Valuation v = val({{"x", x}, {"y", y}});
                CHECK(evaluate(sugar, a, v) == evaluate(plain, a, v));
            }
    }
}

TEST_CASE("evaluation errors") {
    CHECK_THROWS_AS(evaluate(parse_term("x | y"), wke(), val({{"x", "0"}})), error);
    CHECK_THROWS_AS(evaluate(parse_term("J2 x"), wk(), val({{"x", "0"}})), error);
}

TEST_CASE("identity checking finds the first counterexample in valuation order") {
    auto r = check_identity(wke(), parse_identity("x | -x = 1"));
    CHECK_FALSE(r.holds);
    CHECK(valuation_to_string(*r.counterexample) == "x=half");

    CHECK(check_identity(b2e(), parse_identity("J2 x = x")).holds);

    auto sep = check_identity(wke(), parse_identity("J2 -x = -J2 x"));
    CHECK_FALSE(sep.holds);
    CHECK(valuation_to_string(*sep.counterexample) == "x=half");
}

TEST_CASE("quasi-identity checking") {
    // the two-variable cancellation law of the simplified basis
    auto q = parse_quasi_identity("J0 x = J0 y , J2 x = J2 y => x = y");
    CHECK(check_quasi_identity(wke(), q).holds);

    auto fix = parse_quasi_identity("x = -x , y = -y => x = y");
    auto r = check_quasi_identity(sl2e(), fix);
    CHECK_FALSE(r.holds);
    CHECK(valuation_to_string(*r.counterexample) == "x=0,y=e");

    // empty premises behave like a plain identity
    auto empty = parse_quasi_identity("x | -x = 1");
    CHECK(empty.premises.empty());
    CHECK_FALSE(check_quasi_identity(wke(), empty).holds);
}

TEST_CASE("identities are isomorphism-invariant") {
    FiniteAlgebra renamed = wke().renamed({{"0", "bot"}, {"1", "top"}});
    for (const char* text : {"x | -x = 1", "J2 -x = -J2 x", "x & J2 x = x", "--x = x"})
        CHECK(check_identity(wke(), parse_identity(text)).holds ==
              check_identity(renamed, parse_identity(text)).holds);
}

TEST_CASE("identities valid in both factors hold in the product") {
    FiniteAlgebra p = direct_product(b2e(), sl2e());
    for (const char* text : {"x & J2 x = x", "J2 (x & -x) = 0", "J2 x | -J2 x = 1"}) {
        Identity id = parse_identity(text);
        REQUIRE(check_identity(b2e(), id).holds);
        REQUIRE(check_identity(sl2e(), id).holds);
        CHECK(check_identity(p, id).holds);
    }
}

TEST_CASE("tautology checking over the three-valued matrix") {
    const std::vector<int> be = {wke().index_of("1")};
    const std::vector<int> pwke = {wke().index_of("1"), wke().index_of("half")};

    CHECK(tautology(parse_term("J2 x | -J2 x"), wke(), be).holds);
    auto r = tautology(parse_term("x | -x"), wke(), be);
    CHECK_FALSE(r.holds);
    CHECK(valuation_to_string(*r.counterexample) == "x=half");
    CHECK(tautology(parse_term("x | -x"), wke(), pwke).holds);
}

TEST_CASE("identity and quasi-identity parsing and printing") {
    Identity id = parse_identity("x | y = y | x");
    CHECK(identity_to_string(id) == "x | y = y | x");
    QuasiIdentity q = parse_quasi_identity("x = y , y = z => x = z");
    CHECK(q.premises.size() == 2);
    CHECK(quasi_identity_to_string(q) == "x = y , y = z => x = z");
    CHECK_THROWS_AS(parse_identity("x | y"), error);
    CHECK_THROWS_AS(parse_identity("x = y = z"), error);
}
