#include "bochvar/fixtures.hpp"

namespace bochvar {
namespace fixtures {

const FiniteAlgebra& wke() {
    static const FiniteAlgebra a = make_algebra(
        "WKe", {"0", "half", "1"},
        {{"0", "half", "0"}, {"half", "half", "half"}, {"0", "half", "1"}},
        {{"0", "half", "1"}, {"half", "half", "half"}, {"1", "half", "1"}},
        {{"0", "1"}, {"half", "half"}, {"1", "0"}},
        std::map<std::string, std::string>{{"0", "0"}, {"half", "0"}, {"1", "1"}}, "0", "1");
    return a;
}

const FiniteAlgebra& wk() {
    static const FiniteAlgebra a = wke().reduct();
    return a;
}

const FiniteAlgebra& b2() {
    static const FiniteAlgebra a =
        make_algebra("B2", {"0", "1"}, {{"0", "0"}, {"0", "1"}}, {{"0", "1"}, {"1", "1"}},
                     {{"0", "1"}, {"1", "0"}}, std::nullopt, "0", "1");
    return a;
}

const FiniteAlgebra& b2e() {
    static const FiniteAlgebra a = b2().with_j2({0, 1}, "B2e");
    return a;
}

const FiniteAlgebra& sl2() {
    static const FiniteAlgebra a =
        make_algebra("SL2", {"0", "e"}, {{"0", "e"}, {"e", "e"}}, {{"0", "e"}, {"e", "e"}},
                     {{"0", "0"}, {"e", "e"}}, std::nullopt, "0", "0");
    return a;
}

const FiniteAlgebra& sl2e() {
    static const FiniteAlgebra a = sl2().with_j2({0, 0}, "SL2e");
    return a;
}

const FiniteAlgebra& trivial() {
    static const FiniteAlgebra a =
        make_algebra("T1", {"0"}, {{"0"}}, {{"0"}}, {{"0", "0"}},
                     std::map<std::string, std::string>{{"0", "0"}}, "0", "0");
    return a;
}

const FiniteAlgebra& trivial_reduct() {
    static const FiniteAlgebra a = trivial().reduct();
    return a;
}

const BooleanAlgebra& bool2() {
    static const BooleanAlgebra b = BooleanAlgebra::from_atoms({"p"});
    return b;
}

const BooleanAlgebra& bool4() {
    static const BooleanAlgebra b = BooleanAlgebra::from_atoms({"p", "q"});
    return b;
}

const BooleanAlgebra& bool8() {
    static const BooleanAlgebra b = BooleanAlgebra::from_atoms({"p", "q", "r"});
    return b;
}

FiniteAlgebra sl_chain(int n) {
    if (n < 1) throw error("sl_chain: need at least one element");
    AlgebraData d;
    d.name = "SL" + std::to_string(n) + "chain";
    for (int i = 0; i < n; ++i) d.elements.push_back("s" + std::to_string(i));
    d.and_table.assign(n, std::vector<std::string>(n));
    d.or_table.assign(n, std::vector<std::string>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            d.and_table[i][j] = d.or_table[i][j] = d.elements[std::max(i, j)];
    std::map<std::string, std::string> j2;
    for (int i = 0; i < n; ++i) {
        d.not_table[d.elements[i]] = d.elements[i];
        j2[d.elements[i]] = d.elements[0];
    }
    d.j2_table = std::move(j2);
    d.zero = d.one = d.elements[0];
    return FiniteAlgebra::from_data(d);
}

FiniteAlgebra sl_diamond() {
    // 0 below incomparable a,b below top t; join of a,b is t
    std::vector<std::string> e = {"z", "a", "b", "t"};
    auto join = [](int i, int j) {
        if (i == j) return i;
        if (i == 0) return j;
        if (j == 0) return i;
        return 3;
    };
    AlgebraData d;
    d.name = "SL4diamond";
    d.elements = e;
    d.and_table.assign(4, std::vector<std::string>(4));
    d.or_table.assign(4, std::vector<std::string>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) d.and_table[i][j] = d.or_table[i][j] = e[join(i, j)];
    std::map<std::string, std::string> j2;
    for (int i = 0; i < 4; ++i) {
        d.not_table[e[i]] = e[i];
        j2[e[i]] = e[0];
    }
    d.j2_table = std::move(j2);
    d.zero = d.one = e[0];
    return FiniteAlgebra::from_data(d);
}

SemilatticeDirectSystem wk_system() {
    SystemData d;
    d.index_elements = {"bot", "top"};
    d.order = {{"bot", "top"}};
    d.fibres["bot"] = b2().to_data();
    AlgebraData half;
    half.name = "half-fibre";
    half.elements = {"half"};
    half.and_table = {{"half"}};
    half.or_table = {{"half"}};
    half.not_table = {{"half", "half"}};
    half.zero = half.one = "half";
    d.fibres["top"] = half;
    d.homs[{"bot", "top"}] = {{"0", "half"}, {"1", "half"}};
    return SemilatticeDirectSystem::from_data(d);
}

SemilatticeDirectSystem forb_system() {
    SystemData d;
    d.index_elements = {"o", "i", "j", "k"};
    d.order = {{"o", "i"}, {"o", "j"}, {"i", "k"}, {"j", "k"}};

    auto b2_named = [](const std::string& suffix) {
        AlgebraData a = b2().to_data();
        a.name = "B2" + suffix;
        if (!suffix.empty()) {
            a.elements = {"0" + suffix, "1" + suffix};
            a.and_table = {{"0" + suffix, "0" + suffix}, {"0" + suffix, "1" + suffix}};
            a.or_table = {{"0" + suffix, "1" + suffix}, {"1" + suffix, "1" + suffix}};
            a.not_table = {{"0" + suffix, "1" + suffix}, {"1" + suffix, "0" + suffix}};
            a.zero = "0" + suffix;
            a.one = "1" + suffix;
        }
        return a;
    };
    d.fibres["o"] = b2_named("");
    d.fibres["i"] = b2_named("i");
    d.fibres["j"] = b2_named("j");
    AlgebraData top;
    top.name = "Tk";
    top.elements = {"0k"};
    top.and_table = {{"0k"}};
    top.or_table = {{"0k"}};
    top.not_table = {{"0k", "0k"}};
    top.zero = top.one = "0k";
    d.fibres["k"] = top;

    d.homs[{"o", "i"}] = {{"0", "0i"}, {"1", "1i"}};
    d.homs[{"o", "j"}] = {{"0", "0j"}, {"1", "1j"}};
    d.homs[{"i", "k"}] = {{"0i", "0k"}, {"1i", "0k"}};
    d.homs[{"j", "k"}] = {{"0j", "0k"}, {"1j", "0k"}};
    return SemilatticeDirectSystem::from_data(d);
}

const FiniteAlgebra& forb() {
    static const FiniteAlgebra a = [] {
        FiniteAlgebra sum = plonka_sum(forb_system()).algebra;
        AlgebraData d = sum.to_data();
        d.name = "FORB";
        return FiniteAlgebra::from_data(d);
    }();
    return a;
}

}  // namespace fixtures
}  // namespace bochvar
