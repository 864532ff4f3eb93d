#include "bochvar/equivalence.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "bochvar/axioms.hpp"

namespace bochvar {

namespace {

bool same_system(const BochvarSystem& a, const BochvarSystem& b) {
    return a.boolean.atoms() == b.boolean.atoms() && a.subsemilattice == b.subsemilattice;
}

}  // namespace

std::vector<std::string> validate_bochvar_system(const BochvarSystem& s) {
    std::vector<std::string> out;
    std::set<int> members(s.subsemilattice.begin(), s.subsemilattice.end());
    for (int m : members)
        if (m < 0 || m >= s.boolean.size()) out.push_back("subsemilattice member out of range");
    if (!members.count(s.boolean.full())) out.push_back("subsemilattice does not contain 1");
    for (int x : members)
        for (int y : members)
            if (!members.count(s.boolean.meet(x, y)))
                out.push_back("subsemilattice not meet closed at " + s.boolean.element_name(x) +
                              "," + s.boolean.element_name(y));
    return out;
}

BochvarSystem make_bochvar_system(const BooleanAlgebra& b,
                                  const std::vector<std::string>& member_names) {
    BochvarSystem s{b, {}};
    std::set<int> members;
    for (const auto& n : member_names) members.insert(b.index_of(n));
    s.subsemilattice.assign(members.begin(), members.end());
    auto violations = validate_bochvar_system(s);
    if (!violations.empty()) {
        std::ostringstream msg;
        msg << "invalid Bochvar system:";
        for (const auto& v : violations) msg << "\n  " << v;
        throw error(msg.str());
    }
    return s;
}

std::string bochvar_system_to_string(const BochvarSystem& s) {
    std::ostringstream os;
    os << "<B" << s.boolean.size() << ",{";
    for (size_t i = 0; i < s.subsemilattice.size(); ++i) {
        if (i) os << ",";
        os << s.boolean.element_name(s.subsemilattice[i]);
    }
    os << "}>";
    return os.str();
}

int SystemAlgebra::fibre_of_mask(int mask) const {
    for (size_t f = 0; f < fibre_masks.size(); ++f)
        if (fibre_masks[f] == mask) return static_cast<int>(f);
    throw error("mask is not a subsemilattice member");
}

int SystemAlgebra::locate(int index_mask, int boolean_element) const {
    return element_at.at(fibre_of_mask(index_mask)).at(boolean_element);
}

// ----------------------------------------------------------------------------
// system_to_algebra
// ----------------------------------------------------------------------------

SystemAlgebra system_to_algebra(const BochvarSystem& s) {
    {
        auto violations = validate_bochvar_system(s);
        if (!violations.empty()) throw error("system_to_algebra: " + violations.front());
    }
    const BooleanAlgebra& b = s.boolean;

    // fibres in dual order: larger Boolean elements give smaller filters,
    // hence earlier (lower) indices; the bottom fibre sits at mask full.
    std::vector<int> fibre_masks = s.subsemilattice;
    std::sort(fibre_masks.begin(), fibre_masks.end(), std::greater<int>());
    const int nf = static_cast<int>(fibre_masks.size());

    std::vector<Partition> theta;
    std::vector<FiniteAlgebra> fibres;
    std::vector<std::vector<int>> local_of_mask(nf, std::vector<int>(b.size()));
    for (int f = 0; f < nf; ++f) {
        const std::string prefix = b.element_name(fibre_masks[f]) + ":";
        Partition p = filter_congruence(b, principal_filter(b, fibre_masks[f]));
        auto blocks = p.blocks();
        AlgebraData d;
        d.name = "B/[" + b.element_name(fibre_masks[f]) + ")";
        for (const auto& blk : blocks) d.elements.push_back(prefix + b.element_name(blk.front()));
        const int m = static_cast<int>(blocks.size());
        auto bname = [&](int mask) { return d.elements[p.block_of(mask)]; };
        d.and_table.assign(m, std::vector<std::string>(m));
        d.or_table.assign(m, std::vector<std::string>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                d.and_table[i][j] = bname(b.meet(blocks[i].front(), blocks[j].front()));
                d.or_table[i][j] = bname(b.join(blocks[i].front(), blocks[j].front()));
            }
        for (int i = 0; i < m; ++i)
            d.not_table[d.elements[i]] = bname(b.complement(blocks[i].front()));
        d.zero = bname(0);
        d.one = bname(b.full());
        fibres.push_back(FiniteAlgebra::from_data(d));
        for (int mask = 0; mask < b.size(); ++mask) local_of_mask[f][mask] = p.block_of(mask);
        theta.push_back(std::move(p));
    }

    // dual order: f <= g iff mask_g is below mask_f in the Boolean order
    std::vector<std::vector<bool>> leq(nf, std::vector<bool>(nf, false));
    for (int f = 0; f < nf; ++f)
        for (int g = 0; g < nf; ++g) leq[f][g] = b.leq(fibre_masks[g], fibre_masks[f]);

    std::map<std::pair<int, int>, std::vector<int>> homs;
    for (int f = 0; f < nf; ++f)
        for (int g = 0; g < nf; ++g) {
            if (!leq[f][g] || f == g) continue;
            std::vector<int> table(fibres[f].size());
            auto blocks = theta[f].blocks();
            for (size_t e = 0; e < blocks.size(); ++e)
                table[e] = local_of_mask[g][blocks[e].front()];
            homs[{f, g}] = std::move(table);
        }

    std::vector<std::string> index_names;
    for (int f = 0; f < nf; ++f) index_names.push_back(b.element_name(fibre_masks[f]));
    SemilatticeDirectSystem system = SemilatticeDirectSystem::from_parts(
        std::move(index_names), std::move(leq), std::move(fibres), std::move(homs));
    PlonkaSum sum = plonka_sum(system);

    // global index of (fibre f, boolean element mask)
    std::vector<int> offset(nf, 0);
    for (int f = 1; f < nf; ++f) offset[f] = offset[f - 1] + system.fibre(f - 1).size();
    std::vector<std::vector<int>> element_at(nf, std::vector<int>(b.size()));
    for (int f = 0; f < nf; ++f)
        for (int mask = 0; mask < b.size(); ++mask)
            element_at[f][mask] = offset[f] + local_of_mask[f][mask];

    // J2: the unique preimage of each fibre element under p_{bottom,f} inside
    // the interval [0, generator of the fibre's kernel filter]
    const int bottom = system.bottom();
    const FiniteAlgebra& bf = system.fibre(bottom);
    std::vector<int> j2(sum.algebra.size(), -1);
    for (int f = 0; f < nf; ++f) {
        const auto& p = system.hom(bottom, f);
        int kernel_gen = bf.one();
        for (int c = 0; c < bf.size(); ++c)
            if (p[c] == p[bf.one()]) kernel_gen = bf.meet(kernel_gen, c);
        for (int e = 0; e < system.fibre(f).size(); ++e) {
            int found = -1;
            for (int c = 0; c < bf.size(); ++c) {
                if (p[c] != e || bf.meet(c, kernel_gen) != c) continue;
                if (found != -1)
                    throw defect("system_to_algebra: preimage below the generator is not unique");
                found = c;
            }
            if (found == -1)
                throw defect("system_to_algebra: fibre element has no preimage below the generator");
            j2[offset[f] + e] = offset[bottom] + found;
        }
    }

    FiniteAlgebra algebra = sum.algebra.with_j2(j2, "A" + bochvar_system_to_string(s));
    return SystemAlgebra{s,
                         std::move(algebra),
                         std::move(sum.decomposition),
                         std::move(fibre_masks),
                         std::move(element_at)};
}

// ----------------------------------------------------------------------------
// algebra_to_system
// ----------------------------------------------------------------------------

AlgebraSystem algebra_to_system(const FiniteAlgebra& a) {
    if (!a.has_j2()) throw error("algebra_to_system: input has no J2 operation");
    {
        AxiomReport r = check_axiom_set(a, AxiomSetName::BCA);
        if (!r.all_hold) {
            const ItemVerdict* f = r.first_failure();
            throw error("algebra_to_system: '" + a.name() + "' is not a Bochvar algebra (" +
                        f->label + " fails" +
                        (f->counterexample ? " at " + valuation_to_string(*f->counterexample) : "") +
                        ")");
        }
    }

    AlgebraSystem out{/*system=*/{BooleanAlgebra::from_atoms({}), {}},
                      decompose(a.reduct()),
                      /*bottom=*/{BooleanAlgebra::from_atoms({}), {}},
                      {},
                      {}};
    const Decomposition& d = out.decomposition;
    const int bottom = d.system.bottom();
    out.bottom = boolean_from_algebra(d.system.fibre(bottom));
    const BooleanAlgebra& b = out.bottom.algebra;

    out.global_of_mask.assign(b.size(), -1);
    for (int c = 0; c < d.system.fibre(bottom).size(); ++c)
        out.global_of_mask[out.bottom.mask_of[c]] =
            a.index_of(d.system.fibre(bottom).element(c));

    // the subsemilattice collects J2 of each fibre's top element
    std::set<int> members;
    out.generator_of_fibre.assign(d.system.index_count(), -1);
    for (int f = 0; f < d.system.index_count(); ++f) {
        const FiniteAlgebra& fibre = d.system.fibre(f);
        int top_global = a.index_of(fibre.element(fibre.one()));
        int gen_global = a.j2(top_global);
        if (d.fibre_of[gen_global] != bottom)
            throw defect("algebra_to_system: J2 of a fibre top left the bottom fibre in '" +
                         a.name() + "'");
        int mask = out.bottom.mask_of[d.position_in_fibre[gen_global]];
        if (!members.insert(mask).second)
            throw defect("algebra_to_system: two fibres share a generator in '" + a.name() + "'");
        out.generator_of_fibre[f] = mask;
    }
    out.system = BochvarSystem{b, std::vector<int>(members.begin(), members.end())};

    auto violations = validate_bochvar_system(out.system);
    if (!violations.empty())
        throw defect("algebra_to_system: recovered pair is not a Bochvar system on '" + a.name() +
                     "': " + violations.front());

    // the Boolean order on the generators must dualise the fibre order
    for (int f = 0; f < d.system.index_count(); ++f)
        for (int g = 0; g < d.system.index_count(); ++g) {
            bool by_masks = b.leq(out.generator_of_fibre[f], out.generator_of_fibre[g]);
            bool by_fibres = d.system.leq(g, f);
            if (by_masks != by_fibres)
                throw defect("algebra_to_system: generator order disagrees with the fibre order "
                             "on '" + a.name() + "' (generators " +
                             b.element_name(out.generator_of_fibre[f]) + " vs " +
                             b.element_name(out.generator_of_fibre[g]) + ")");
        }
    return out;
}

// ----------------------------------------------------------------------------
// round trips
// ----------------------------------------------------------------------------

AlgebraRoundTrip roundtrip_algebra(const FiniteAlgebra& a) {
    AlgebraSystem gamma = algebra_to_system(a);
    SystemAlgebra rebuilt = system_to_algebra(gamma.system);
    auto iso = find_isomorphism(a, rebuilt.algebra);
    return {std::move(rebuilt), std::move(iso)};
}

Homomorphism canonical_roundtrip_iso(const FiniteAlgebra& a, const AlgebraSystem& gamma,
                                     const SystemAlgebra& rebuilt) {
    std::vector<int> map(a.size(), -1);
    const Decomposition& d = gamma.decomposition;
    for (int x = 0; x < a.size(); ++x) {
        int f = d.fibre_of[x];
        int jx = a.j2(x);
        if (d.fibre_of[jx] != d.system.bottom())
            throw defect("canonical_roundtrip_iso: J2 left the bottom fibre");
        int mask = gamma.bottom.mask_of[d.position_in_fibre[jx]];
        map[x] = rebuilt.locate(gamma.generator_of_fibre[f], mask);
    }
    Homomorphism h{a, rebuilt.algebra, std::move(map)};
    if (auto bad = h.check())
        throw defect("canonical_roundtrip_iso: the canonical map is not a homomorphism: " + *bad);
    if (!h.is_bijective()) throw defect("canonical_roundtrip_iso: the canonical map is not bijective");
    return h;
}

SystemRoundTrip roundtrip_system(const BochvarSystem& s) {
    SystemAlgebra built = system_to_algebra(s);
    AlgebraSystem gamma = algebra_to_system(built.algebra);
    std::set<int> target(gamma.system.subsemilattice.begin(), gamma.system.subsemilattice.end());

    std::optional<Homomorphism> witness;
    for (auto& h : enumerate_homs(s.boolean.view(), gamma.system.boolean.view())) {
        if (!h.is_bijective()) continue;
        std::set<int> image;
        for (int i : s.subsemilattice) image.insert(h.map[i]);
        if (image == target) {
            witness = std::move(h);
            break;
        }
    }
    return {std::move(gamma.system), std::move(witness)};
}

// ----------------------------------------------------------------------------
// morphisms
// ----------------------------------------------------------------------------

std::optional<std::string> SystemMorphism::check() const {
    Homomorphism h{source.boolean.view(), target.boolean.view(), map};
    if (auto bad = h.check()) return bad;
    std::set<int> members(target.subsemilattice.begin(), target.subsemilattice.end());
    for (int i : source.subsemilattice)
        if (!members.count(map[i]))
            return "image of subsemilattice member " + source.boolean.element_name(i) +
                   " is outside the target subsemilattice";
    return std::nullopt;
}

std::vector<SystemMorphism> enumerate_system_morphisms(const BochvarSystem& s1,
                                                       const BochvarSystem& s2) {
    std::vector<SystemMorphism> out;
    for (auto& h : enumerate_homs(s1.boolean.view(), s2.boolean.view())) {
        SystemMorphism g{s1, s2, std::move(h.map)};
        if (!g.check()) out.push_back(std::move(g));
    }
    return out;
}

SystemMorphism gamma_morphism(const Homomorphism& f, const AlgebraSystem& source_system,
                              const AlgebraSystem& target_system) {
    if (auto bad = f.check()) throw error("gamma_morphism: not a homomorphism: " + *bad);
    const BooleanAlgebra& b1 = source_system.bottom.algebra;
    const Decomposition& dt = target_system.decomposition;
    std::vector<int> map(b1.size(), -1);
    for (int mask = 0; mask < b1.size(); ++mask) {
        int image = f.map[source_system.global_of_mask[mask]];
        if (dt.fibre_of[image] != dt.system.bottom())
            throw defect("gamma_morphism: restriction left the bottom fibre");
        map[mask] = target_system.bottom.mask_of[dt.position_in_fibre[image]];
    }
    SystemMorphism g{source_system.system, target_system.system, std::move(map)};
    if (auto bad = g.check())
        throw defect("gamma_morphism: restriction is not a system morphism: " + *bad);
    return g;
}

Homomorphism xi_morphism(const SystemMorphism& g, const SystemAlgebra& source_algebra,
                         const SystemAlgebra& target_algebra) {
    if (auto bad = g.check()) throw error("xi_morphism: invalid system morphism: " + *bad);
    if (!same_system(g.source, source_algebra.system) ||
        !same_system(g.target, target_algebra.system))
        throw error("xi_morphism: constructed algebras do not match the morphism endpoints");

    const FiniteAlgebra& a1 = source_algebra.algebra;
    std::vector<int> map(a1.size(), -1);
    for (int x = 0; x < a1.size(); ++x) {
        int f = source_algebra.decomposition.fibre_of[x];
        int i_mask = source_algebra.fibre_masks[f];
        // least Boolean element whose class at fibre f is x
        int rep = -1;
        for (int mask = 0; mask < source_algebra.system.boolean.size(); ++mask)
            if (source_algebra.element_at[f][mask] == x) {
                rep = mask;
                break;
            }
        if (rep == -1) throw defect("xi_morphism: element has no Boolean representative");
        map[x] = target_algebra.locate(g.map[i_mask], g.map[rep]);
    }
    Homomorphism h{a1, target_algebra.algebra, std::move(map)};
    if (auto bad = h.check())
        throw defect("xi_morphism: induced map is not a homomorphism: " + *bad);
    return h;
}

}  // namespace bochvar
