#include "bochvar/axioms.hpp"

#include <array>
#include <map>
#include <sstream>

#include "bochvar/plonka.hpp"

namespace bochvar {

namespace {

AxiomItem item(const std::string& label, const std::string& text) {
    return {label, parse_quasi_identity(text)};
}

std::string J(int k) { return "J" + std::to_string(k) + " "; }

// Shared lattice core: items 1-8 of both quasi-equational bases.
void push_core(std::vector<AxiomItem>& out, const std::string& prefix) {
    out.push_back(item(prefix + "1", "x | x = x"));
    out.push_back(item(prefix + "2", "x | y = y | x"));
    out.push_back(item(prefix + "3", "(x | y) | z = x | (y | z)"));
    out.push_back(item(prefix + "4", "x & (y | z) = (x & y) | (x & z)"));
    out.push_back(item(prefix + "5", "--x = x"));
    out.push_back(item(prefix + "6", "-1 = 0"));
    out.push_back(item(prefix + "7", "-(x | y) = -x & -y"));
    out.push_back(item(prefix + "8", "0 | x = x"));
}

std::vector<AxiomItem> build_fg() {
    std::vector<AxiomItem> out;
    push_core(out, "FG.");
    auto k_suffix = [](int k) { return ".k" + std::to_string(k); };
    for (int k = 0; k < 3; ++k)
        out.push_back(item("FG.9" + k_suffix(k), "J2 " + J(k) + "x = " + J(k) + "x"));
    for (int k = 0; k < 3; ++k)
        out.push_back(item("FG.10" + k_suffix(k), "J0 " + J(k) + "x = -" + J(k) + "x"));
    for (int k = 0; k < 3; ++k)
        out.push_back(item("FG.11" + k_suffix(k), "J1 " + J(k) + "x = 0"));
    for (int k = 0; k < 3; ++k)
        out.push_back(item("FG.12" + k_suffix(k), J(k) + "-x = " + J(2 - k) + "x"));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                if (i == j || j == k || i == k) continue;
                std::string label = "FG.13.i" + std::to_string(i) + "j" + std::to_string(j) + "k" +
                                    std::to_string(k);
                out.push_back(item(label, J(i) + "x = -(" + J(j) + "x | " + J(k) + "x)"));
            }
    for (int k = 0; k < 3; ++k)
        out.push_back(item("FG.14" + k_suffix(k), J(k) + "x | -" + J(k) + "x = 1"));
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            std::string label = "FG.15.i" + std::to_string(i) + "k" + std::to_string(k);
            out.push_back(item(label, "(" + J(i) + "x | " + J(k) + "x) & " + J(i) + "x = " + J(i) + "x"));
        }
    for (int k = 1; k < 3; ++k)
        out.push_back(item("FG.16" + k_suffix(k), "x | " + J(k) + "x = x"));
    out.push_back(item("FG.17", "J0 (x | y) = J0 x & J0 y"));
    out.push_back(item("FG.18",
                       "J2 (x | y) = (J2 x & J2 y) | (J2 x & J2 -y) | (J2 -x & J2 y)"));
    out.push_back(item("FG.19", "J0 x = J0 y , J1 x = J1 y , J2 x = J2 y => x = y"));
    return out;
}

std::vector<AxiomItem> build_bca() {
    std::vector<AxiomItem> out;
    push_core(out, "BCA.");
    out.push_back(item("BCA.9", "J0 J2 x = -J2 x"));
    out.push_back(item("BCA.10", "J2 x = -(J0 x | J1 x)"));
    out.push_back(item("BCA.11", "J2 x | -J2 x = 1"));
    out.push_back(item("BCA.12",
                       "J2 (x | y) = (J2 x & J2 y) | (J2 x & J2 -y) | (J2 -x & J2 y)"));
    out.push_back(item("BCA.13", "J0 x = J0 y , J2 x = J2 y => x = y"));
    return out;
}

std::vector<AxiomItem> build_ibsl() {
    return {
        item("I1", "x | x = x"),
        item("I2", "x | y = y | x"),
        item("I3", "x | (y | z) = (x | y) | z"),
        item("I4", "--x = x"),
        item("I5", "x & y = -(-x | -y)"),
        item("I6", "x & (-x | y) = x & y"),
        item("I7", "0 | x = x"),
        item("I8", "1 = -0"),
    };
}

std::vector<AxiomItem> build_sibsl() {
    auto out = build_ibsl();
    out.push_back(item("SIBSL.q", "x = -x , y = -y => x = y"));
    return out;
}

std::vector<AxiomItem> build_k() {
    std::vector<AxiomItem> out;
    int n = 1;
    for (auto& it : build_ibsl()) {
        out.push_back({"K" + std::to_string(n++), it.body});
    }
    out.push_back(item("K9", "J2 x | -J2 x = 1"));
    out.push_back(item("K10", "x | J2 y = x | J2 (x | y)"));
    out.push_back(item("K11", "x & J2 x = x"));
    out.push_back(item("K12", "J2 (x & -x) = 0"));
    return out;
}

const AxiomSet& build(AxiomSetName name) {
    static const std::map<AxiomSetName, AxiomSet> sets = [] {
        std::map<AxiomSetName, AxiomSet> m;
        m.emplace(AxiomSetName::FG, AxiomSet{AxiomSetName::FG, build_fg()});
        m.emplace(AxiomSetName::BCA, AxiomSet{AxiomSetName::BCA, build_bca()});
        m.emplace(AxiomSetName::IBSL, AxiomSet{AxiomSetName::IBSL, build_ibsl()});
        m.emplace(AxiomSetName::SIBSL, AxiomSet{AxiomSetName::SIBSL, build_sibsl()});
        m.emplace(AxiomSetName::K, AxiomSet{AxiomSetName::K, build_k()});
        auto v = build_k();
        v.push_back(item("V.extra", "J2 -x = -J2 x"));
        m.emplace(AxiomSetName::V, AxiomSet{AxiomSetName::V, std::move(v)});
        auto ba = build_k();
        ba.push_back(item("BA.extra", "J2 x = x"));
        m.emplace(AxiomSetName::BA_rel, AxiomSet{AxiomSetName::BA_rel, std::move(ba)});
        auto sl = build_k();
        sl.push_back(item("SL.extra", "J2 x = 1"));
        m.emplace(AxiomSetName::SL_rel, AxiomSet{AxiomSetName::SL_rel, std::move(sl)});
        return m;
    }();
    return sets.at(name);
}

}  // namespace

const AxiomSet& axiom_set(AxiomSetName name) { return build(name); }

AxiomSetName axiom_set_by_name(const std::string& name) {
    static const std::map<std::string, AxiomSetName> names = {
        {"FG", AxiomSetName::FG},     {"BCA", AxiomSetName::BCA},
        {"IBSL", AxiomSetName::IBSL}, {"SIBSL", AxiomSetName::SIBSL},
        {"K", AxiomSetName::K},       {"V", AxiomSetName::V},
        {"BA_rel", AxiomSetName::BA_rel}, {"SL_rel", AxiomSetName::SL_rel},
        {"BA", AxiomSetName::BA_rel}, {"SL", AxiomSetName::SL_rel},
    };
    auto it = names.find(name);
    if (it == names.end()) throw error("unknown axiom set '" + name + "'");
    return it->second;
}

std::string axiom_set_name(AxiomSetName name) {
    switch (name) {
        case AxiomSetName::FG: return "FG";
        case AxiomSetName::BCA: return "BCA";
        case AxiomSetName::IBSL: return "IBSL";
        case AxiomSetName::SIBSL: return "SIBSL";
        case AxiomSetName::K: return "K";
        case AxiomSetName::V: return "V";
        case AxiomSetName::BA_rel: return "BA_rel";
        case AxiomSetName::SL_rel: return "SL_rel";
    }
    throw error("unreachable axiom set name");
}

const ItemVerdict* AxiomReport::first_failure() const {
    for (const auto& v : verdicts)
        if (!v.holds) return &v;
    return nullptr;
}

AxiomReport check_axiom_set(const FiniteAlgebra& a, AxiomSetName set) {
    AxiomReport report;
    report.set = set;
    for (const auto& it : axiom_set(set).items) {
        CheckResult r = check_quasi_identity(a, it.body);
        report.verdicts.push_back({it.label, r.holds, r.counterexample});
        if (!r.holds) report.all_hold = false;
    }
    return report;
}

bool passes(const FiniteAlgebra& a, AxiomSetName set) {
    for (const auto& it : axiom_set(set).items)
        if (!check_quasi_identity(a, it.body).holds) return false;
    return true;
}

std::string render_report(const AxiomReport& report) {
    std::ostringstream os;
    for (const auto& v : report.verdicts) {
        os << v.label << ": " << (v.holds ? "HOLDS" : "FAILS");
        if (!v.holds && v.counterexample) os << " at " << valuation_to_string(*v.counterexample);
        os << "\n";
    }
    return os.str();
}

Classification classify(const FiniteAlgebra& a) {
    Classification c;
    c.has_j2 = a.has_j2();
    auto record = [&](AxiomSetName s) {
        bool ok = passes(a, s);
        c.memberships.emplace_back(axiom_set_name(s), ok);
        return ok;
    };
    c.ibsl = record(AxiomSetName::IBSL);
    record(AxiomSetName::SIBSL);
    if (a.has_j2()) {
        record(AxiomSetName::FG);
        record(AxiomSetName::BCA);
        c.k_member = record(AxiomSetName::K);
        record(AxiomSetName::V);
        record(AxiomSetName::BA_rel);
        record(AxiomSetName::SL_rel);
        static const std::array<std::pair<const char*, const char*>, 4> consequences = {{
            {"K.c1", "x | J2 x = x"},
            {"K.c2", "x = J2 x | (x & -x)"},
            {"K.c3", "J2 J2 x = J2 x"},
            {"K.c4", "x | -J2 y = x | -J2 (x | y)"},
        }};
        for (const auto& [label, text] : consequences) {
            CheckResult r = check_identity(a, parse_identity(text));
            c.k_consequences.push_back({label, r.holds, r.counterexample});
        }
        if (c.k_member)
            for (const auto& v : c.k_consequences)
                if (!v.holds)
                    throw defect("derived identity " + v.label + " fails in a K-member '" +
                                 a.name() + "'");
    }
    for (int i = 0; i < a.size(); ++i)
        if (a.neg(i) == i) ++c.fixpoint_count;
    if (c.ibsl) c.fibre_count = static_cast<int>(decompose(a.reduct()).system.index_count());
    return c;
}

std::string render_classification(const Classification& c) {
    std::ostringstream os;
    for (const auto& [name, ok] : c.memberships)
        os << name << ": " << (ok ? "yes" : "no") << "\n";
    os << "fixpoints: " << c.fixpoint_count << "\n";
    if (c.ibsl) os << "fibres: " << c.fibre_count << "\n";
    for (const auto& v : c.k_consequences) {
        os << v.label << ": " << (v.holds ? "HOLDS" : "FAILS");
        if (!v.holds && v.counterexample) os << " at " << valuation_to_string(*v.counterexample);
        os << "\n";
    }
    return os.str();
}

}  // namespace bochvar
