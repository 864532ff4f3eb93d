#include "bochvar/varieties.hpp"

#include <algorithm>
#include <set>

#include "bochvar/boolean.hpp"
#include "bochvar/fixtures.hpp"

namespace bochvar {

namespace {

void require_catalog(const FiniteAlgebra& a, AxiomSetName set, const std::string& who) {
    AxiomReport r = check_axiom_set(a, set);
    if (!r.all_hold) {
        const ItemVerdict* f = r.first_failure();
        throw error(who + ": '" + a.name() + "' fails " + f->label +
                    (f->counterexample ? " at " + valuation_to_string(*f->counterexample) : ""));
    }
}

std::vector<int> complemented_elements(const FiniteAlgebra& a) {
    std::vector<int> out;
    for (int x = 0; x < a.size(); ++x)
        if (a.join(x, a.neg(x)) == a.one()) out.push_back(x);
    return out;
}

}  // namespace

// ----------------------------------------------------------------------------
// forced extension and table search
// ----------------------------------------------------------------------------

JdefResult jdef_extension(const FiniteAlgebra& a) {
    Decomposition d = decompose(a);  // verifies J2-free involutive bisemilattice
    const int bottom = d.system.bottom();
    if (d.system.fibre(bottom).size() != 2)
        throw error("jdef_extension: bottom fibre has " +
                    std::to_string(d.system.fibre(bottom).size()) +
                    " elements; the forced rule needs exactly 2");

    std::vector<int> table(a.size(), a.zero());
    for (int f = 0; f < d.system.index_count(); ++f) {
        const FiniteAlgebra& fibre = d.system.fibre(f);
        if (fibre.size() <= 1) continue;  // trivial fibre: everything to 0
        table[a.index_of(fibre.element(fibre.one()))] = a.one();
    }
    FiniteAlgebra candidate = a.with_j2(table, a.name() + "+J2");
    AxiomReport r = check_axiom_set(candidate, AxiomSetName::K);
    if (r.all_hold) return {std::move(candidate), "", std::nullopt};
    const ItemVerdict* f = r.first_failure();
    return {std::nullopt, f->label, f->counterexample};
}

long long k9_search_space(const FiniteAlgebra& a) {
    long long space = 1;
    const long long base = static_cast<long long>(complemented_elements(a).size());
    for (int x = 0; x < a.size(); ++x) space *= base;
    return space;
}

std::vector<std::vector<int>> enumerate_j2_tables(const FiniteAlgebra& a, AxiomSetName catalog,
                                                  bool literal_k9_sweep) {
    if (a.has_j2()) throw error("enumerate_j2_tables: input must be J2-free");
    if (catalog != AxiomSetName::K && catalog != AxiomSetName::BCA && catalog != AxiomSetName::V &&
        catalog != AxiomSetName::FG)
        throw error("enumerate_j2_tables: catalog must mention J2");

    std::vector<int> complemented = complemented_elements(a);
    std::vector<std::vector<int>> candidates(a.size(), complemented);

    if (!literal_k9_sweep) {
        // pointwise instances of identities valid throughout K (hence in
        // every catalog extending it): x & J2 x = x, and J2 d = 0 for d in
        // the image of y & -y
        std::vector<bool> dense_definable(a.size(), false);
        for (int y = 0; y < a.size(); ++y) dense_definable[a.meet(y, a.neg(y))] = true;
        for (int x = 0; x < a.size(); ++x) {
            std::vector<int> keep;
            for (int c : candidates[x]) {
                if (a.meet(x, c) != x) continue;
                if (dense_definable[x] && c != a.zero()) continue;
                keep.push_back(c);
            }
            candidates[x] = std::move(keep);
        }
    }

    std::vector<std::vector<int>> found;
    std::vector<int> table(a.size(), -1);
    // product enumeration over the per-element candidate lists
    std::vector<size_t> pick(a.size(), 0);
    for (int x = 0; x < a.size(); ++x)
        if (candidates[x].empty()) return found;
    while (true) {
        for (int x = 0; x < a.size(); ++x) table[x] = candidates[x][pick[x]];
        FiniteAlgebra candidate = a.with_j2(table);
        if (passes(candidate, catalog)) found.push_back(table);
        int pos = a.size() - 1;
        while (pos >= 0) {
            if (++pick[pos] < candidates[pos].size()) break;
            pick[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return found;
}

std::vector<FiniteAlgebra> forbidden_search(const FiniteAlgebra& a, bool literal_k9_sweep) {
    std::vector<FiniteAlgebra> out;
    for (const auto& table : enumerate_j2_tables(a, AxiomSetName::K, literal_k9_sweep))
        out.push_back(a.with_j2(table, a.name() + "+J2"));
    return out;
}

// ----------------------------------------------------------------------------
// theta congruences
// ----------------------------------------------------------------------------

Partition theta_a(const FiniteAlgebra& a, int g) {
    require_catalog(a, AxiomSetName::K, "theta_a");
    Decomposition d = decompose(a.reduct());
    if (d.fibre_of.at(g) != d.system.bottom())
        throw error("theta_a: '" + a.element(g) + "' is not in the bottom fibre");

    // classes share the pair (g|b, g|-b)
    std::vector<int> labels(a.size());
    std::map<std::pair<int, int>, int> canon;
    for (int x = 0; x < a.size(); ++x) {
        auto key = std::make_pair(a.join(g, x), a.join(g, a.neg(x)));
        labels[x] = canon.emplace(key, static_cast<int>(canon.size())).first->second;
    }
    Partition p = Partition::from_labels(labels);
    std::string why;
    if (!is_congruence(a, p, &why))
        throw defect("theta_a is not a congruence of '" + a.name() + "': " + why);
    return p;
}

Partition fibre_congruence(const FiniteAlgebra& a) {
    require_catalog(a, AxiomSetName::K, "fibre_congruence");
    Decomposition d = decompose(a.reduct());
    Partition p = Partition::from_labels(d.fibre_of);
    std::string why;
    if (!is_congruence(a, p, &why))
        throw defect("fibre congruence is not one on '" + a.name() + "': " + why);
    return p;
}

// ----------------------------------------------------------------------------
// HS / ISP membership
// ----------------------------------------------------------------------------

std::string hs_class_name(HsClass c) {
    switch (c) {
        case HsClass::trivial: return "trivial";
        case HsClass::b2: return "B2";
        case HsClass::sl2: return "SL2";
        case HsClass::wke: return "WKe";
        case HsClass::none: return "none";
    }
    return "none";
}

HsClass hs_wke_classify(const FiniteAlgebra& a) {
    const bool j2 = a.has_j2();
    auto probe = [&](const FiniteAlgebra& canon) {
        const FiniteAlgebra target = j2 ? canon : canon.reduct();
        return a.size() == target.size() && find_isomorphism(a, target).has_value();
    };
    if (probe(fixtures::trivial())) return HsClass::trivial;
    if (probe(fixtures::b2e())) return HsClass::b2;
    if (probe(fixtures::sl2e())) return HsClass::sl2;
    if (probe(fixtures::wke())) return HsClass::wke;
    return HsClass::none;
}

IspResult isp_wke_check(const FiniteAlgebra& a, int size_bound) {
    if (!a.has_j2()) throw error("isp_wke_check: input has no J2 operation");
    if (a.size() > size_bound)
        throw error("isp_wke_check: carrier size " + std::to_string(a.size()) +
                    " exceeds the bound " + std::to_string(size_bound));
    IspResult r;
    r.basis_pass = passes(a, AxiomSetName::BCA);

    std::vector<Homomorphism> homs = enumerate_homs(a, fixtures::wke());
    bool separating = true;
    for (int x = 0; x < a.size() && separating; ++x)
        for (int y = x + 1; y < a.size() && separating; ++y) {
            bool split = false;
            for (const auto& h : homs)
                if (h.map[x] != h.map[y]) {
                    split = true;
                    break;
                }
            if (!split) separating = false;
        }
    if (a.size() == 1) separating = true;
    r.embeds = separating && (a.size() == 1 || !homs.empty());
    if (r.embeds) {
        r.power = static_cast<int>(homs.size());
        for (const auto& h : homs) r.separating_maps.push_back(h.map);
    }
    return r;
}

// ----------------------------------------------------------------------------
// open / dense decomposition
// ----------------------------------------------------------------------------

std::vector<int> open_elements(const FiniteAlgebra& a) {
    require_catalog(a, AxiomSetName::K, "open_elements");
    std::vector<int> fixed;
    for (int x = 0; x < a.size(); ++x)
        if (a.j2(x) == x) fixed.push_back(x);
    std::set<int> image;
    for (int x = 0; x < a.size(); ++x) image.insert(a.j2(x));
    if (std::set<int>(fixed.begin(), fixed.end()) != image)
        throw defect("open_elements: fixed points of J2 differ from its image on '" + a.name() +
                     "'");
    return fixed;
}

std::vector<int> dense_elements(const FiniteAlgebra& a) {
    require_catalog(a, AxiomSetName::K, "dense_elements");
    std::vector<int> kernel;
    for (int x = 0; x < a.size(); ++x)
        if (a.j2(x) == a.zero()) kernel.push_back(x);
    std::set<int> image;
    for (int x = 0; x < a.size(); ++x) image.insert(a.meet(x, a.neg(x)));
    if (std::set<int>(kernel.begin(), kernel.end()) != image)
        throw defect("dense_elements: kernel of J2 differs from the image of x&-x on '" +
                     a.name() + "'");
    return kernel;
}

ODDecomposition od_embedding(const FiniteAlgebra& a) {
    require_catalog(a, AxiomSetName::V, "od_embedding");
    std::vector<int> open = open_elements(a);
    std::vector<int> dense = dense_elements(a);

    // the open part is a genuine subalgebra (closure verified by subalgebra)
    FiniteAlgebra open_part = subalgebra(a, open, a.name() + "|open");
    if (!is_boolean(open_part.reduct()))
        throw defect("od_embedding: open part of '" + a.name() + "' is not Boolean");
    require_catalog(open_part, AxiomSetName::BA_rel, "od_embedding(open part)");

    // the dense part is a semilattice under join, with negation flattened to
    // the identity; meet and join agree on dense elements
    AlgebraData dd;
    dd.name = a.name() + "|dense";
    std::map<int, int> pos;
    for (int x : dense) {
        pos[x] = static_cast<int>(dd.elements.size());
        dd.elements.push_back(a.element(x));
    }
    const int m = static_cast<int>(dense.size());
    dd.and_table.assign(m, std::vector<std::string>(m));
    dd.or_table.assign(m, std::vector<std::string>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int join = a.join(dense[i], dense[j]);
            if (a.meet(dense[i], dense[j]) != join)
                throw defect("od_embedding: meet and join disagree on dense elements of '" +
                             a.name() + "'");
            if (!pos.count(join))
                throw defect("od_embedding: dense elements not closed under join in '" + a.name() +
                             "'");
            dd.and_table[i][j] = dd.or_table[i][j] = a.element(join);
        }
    std::map<std::string, std::string> j2_const;
    for (int i = 0; i < m; ++i) {
        dd.not_table[dd.elements[i]] = dd.elements[i];
        j2_const[dd.elements[i]] = a.element(a.zero());
        if (a.j2(dense[i]) != a.zero())
            throw defect("od_embedding: J2 not constant zero on dense elements of '" + a.name() +
                         "'");
    }
    dd.j2_table = std::move(j2_const);
    dd.zero = dd.one = a.element(a.zero());
    FiniteAlgebra dense_part = FiniteAlgebra::from_data(dd);
    require_catalog(dense_part, AxiomSetName::SL_rel, "od_embedding(dense part)");

    // the dense part realises the quotient by (x&-x = y&-y)
    {
        std::vector<int> labels(a.size());
        std::map<int, int> canon;
        for (int x = 0; x < a.size(); ++x) {
            int key = a.meet(x, a.neg(x));
            labels[x] = canon.emplace(key, static_cast<int>(canon.size())).first->second;
        }
        Partition theta = Partition::from_labels(labels);
        std::string why;
        if (!is_congruence(a, theta, &why))
            throw defect("od_embedding: the dense-kernel relation is not a congruence on '" +
                         a.name() + "': " + why);
        Quotient q = quotient_algebra(a, theta);
        if (!find_isomorphism(q.algebra, dense_part).has_value())
            throw defect("od_embedding: dense part is not isomorphic to the quotient on '" +
                         a.name() + "'");
    }

    FiniteAlgebra product = direct_product(open_part, dense_part);
    std::vector<int> map(a.size());
    for (int x = 0; x < a.size(); ++x) {
        const std::string name = "(" + a.element(a.j2(x)) + "," + a.element(a.meet(x, a.neg(x))) + ")";
        map[x] = product.index_of(name);
    }
    Homomorphism phi{a, product, std::move(map)};
    if (auto bad = phi.check())
        throw defect("od_embedding: the pairing map is not a homomorphism on '" + a.name() +
                     "': " + *bad);
    std::set<int> image(phi.map.begin(), phi.map.end());
    if (static_cast<int>(image.size()) != a.size())
        throw defect("od_embedding: the pairing map is not injective on '" + a.name() + "'");

    bool onto = static_cast<int>(image.size()) == product.size();
    return ODDecomposition{a, std::move(open_part), std::move(dense_part), std::move(product),
                           std::move(phi), onto};
}

IndependenceResult independence_check(const FiniteAlgebra& a) {
    const bool ba = passes(a, AxiomSetName::BA_rel);
    const bool sl = passes(a, AxiomSetName::SL_rel);
    if (!ba && !sl)
        throw error("independence_check: '" + a.name() +
                    "' is in neither relative subvariety");
    IndependenceResult out;
    out.boolean_side = ba;
    Identity id = parse_identity(ba ? "J2 x | (J2 x & y) = x" : "J2 x | (J2 x & y) = y");
    CheckResult r = check_identity(a, id);
    out.holds = r.holds;
    out.counterexample = r.counterexample;
    return out;
}

}  // namespace bochvar
