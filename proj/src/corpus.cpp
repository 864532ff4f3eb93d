#include "bochvar/corpus.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bochvar/equivalence.hpp"
#include "bochvar/fixtures.hpp"

namespace bochvar {

namespace {

// Cheap isomorphism-invariant fingerprint to bucket candidates before the
// real isomorphism search runs.
struct Fingerprint {
    int size;
    bool j2;
    int fixpoints;
    int complemented;
    int j2_fixed;
    std::vector<std::pair<int, int>> element_profile;  // sorted

    auto operator<=>(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const FiniteAlgebra& a) {
    Fingerprint f{a.size(), a.has_j2(), 0, 0, 0, {}};
    for (int x = 0; x < a.size(); ++x) {
        if (a.neg(x) == x) ++f.fixpoints;
        if (a.join(x, a.neg(x)) == a.one()) ++f.complemented;
        if (a.has_j2() && a.j2(x) == x) ++f.j2_fixed;
        std::set<int> meets, joins;
        for (int y = 0; y < a.size(); ++y) {
            meets.insert(a.meet(x, y));
            joins.insert(a.join(x, y));
        }
        f.element_profile.emplace_back(static_cast<int>(meets.size()),
                                       static_cast<int>(joins.size()));
    }
    std::sort(f.element_profile.begin(), f.element_profile.end());
    return f;
}

class Dedup {
public:
    bool insert(const FiniteAlgebra& a) {
        Fingerprint f = fingerprint(a);
        auto& bucket = buckets_[f];
        for (const FiniteAlgebra& seen : bucket)
            if (find_isomorphism(seen, a)) return false;
        bucket.push_back(a);
        return true;
    }

private:
    std::map<Fingerprint, std::vector<FiniteAlgebra>> buckets_;
};

}  // namespace

std::vector<CorpusEntry> build_corpus(const CorpusOptions& options) {
    std::vector<CorpusEntry> base;

    // Bochvar-system algebras over small powersets
    const std::vector<std::string> atom_pool = {"p", "q", "r", "s"};
    for (int atoms = 0; atoms <= options.max_atoms; ++atoms) {
        BooleanAlgebra b = BooleanAlgebra::from_atoms(
            std::vector<std::string>(atom_pool.begin(), atom_pool.begin() + atoms));
        for (const auto& members : enumerate_unit_meet_subsemilattices(b)) {
            BochvarSystem s{b, members};
            base.push_back({"sys" + bochvar_system_to_string(s),
                            system_to_algebra(s).algebra});
        }
    }

    // semilattices with zero up to the size bound: chains plus the diamond
    for (int n = 1; n <= options.max_semilattice; ++n)
        base.push_back({"slchain" + std::to_string(n), fixtures::sl_chain(n)});
    if (options.max_semilattice >= 4) base.push_back({"sldiamond", fixtures::sl_diamond()});

    // pairwise direct products within the size budget
    std::vector<CorpusEntry> all = base;
    for (size_t i = 0; i < base.size(); ++i)
        for (size_t j = i; j < base.size(); ++j) {
            if (base[i].algebra.size() * base[j].algebra.size() > options.max_product_size)
                continue;
            all.push_back({"(" + base[i].label + "x" + base[j].label + ")",
                           direct_product(base[i].algebra, base[j].algebra)});
        }

    // subalgebras generated by at most two elements, and all quotients,
    // taken from members within the product-size budget
    if (options.derived) {
        std::vector<CorpusEntry> derived;
        for (const auto& entry : all) {
            if (entry.algebra.size() > options.max_product_size) continue;
            const FiniteAlgebra& a = entry.algebra;
            std::set<std::vector<int>> universes;
            for (int x = 0; x < a.size(); ++x)
                for (int y = x; y < a.size(); ++y)
                    universes.insert(subuniverse_generated(a, {x, y}));
            int counter = 0;
            for (const auto& u : universes) {
                int sz = static_cast<int>(u.size());
                if (sz >= a.size() || sz > options.max_derived_size) continue;
                derived.push_back({entry.label + "|sub" + std::to_string(counter++),
                                   subalgebra(a, u)});
            }
            counter = 0;
            for (const auto& c : all_congruences(a)) {
                int blocks = c.block_count();
                if (blocks <= 1 || blocks >= a.size() || blocks > options.max_derived_size)
                    continue;
                derived.push_back({entry.label + "/q" + std::to_string(counter++),
                                   quotient_algebra(a, c).algebra});
            }
        }
        all.insert(all.end(), derived.begin(), derived.end());
    }

    Dedup dedup;
    std::vector<CorpusEntry> out;
    for (auto& entry : all)
        if (dedup.insert(entry.algebra)) out.push_back(std::move(entry));
    return out;
}

}  // namespace bochvar
