#include "bochvar/boolean.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "bochvar/axioms.hpp"

namespace bochvar {

namespace {

std::string subset_name(const std::vector<std::string>& atoms, int mask) {
    if (mask == 0) return "0";
    std::string out;
    for (size_t i = 0; i < atoms.size(); ++i)
        if (mask & (1 << i)) {
            if (!out.empty()) out += "+";
            out += atoms[i];
        }
    return out;
}

}  // namespace

BooleanAlgebra BooleanAlgebra::from_atoms(std::vector<std::string> atoms) {
    std::set<std::string> seen;
    for (const auto& a : atoms) {
        if (a.empty()) throw error("atom names must be nonempty");
        if (!seen.insert(a).second) throw error("duplicate atom name '" + a + "'");
    }
    BooleanAlgebra b;
    b.atoms_ = std::move(atoms);
    const int n = b.size();

    AlgebraData d;
    d.name = "B" + std::to_string(n);
    for (int m = 0; m < n; ++m) d.elements.push_back(subset_name(b.atoms_, m));
    d.and_table.assign(n, std::vector<std::string>(n));
    d.or_table.assign(n, std::vector<std::string>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            d.and_table[x][y] = d.elements[x & y];
            d.or_table[x][y] = d.elements[x | y];
        }
    for (int x = 0; x < n; ++x) d.not_table[d.elements[x]] = d.elements[(n - 1) & ~x];
    d.zero = d.elements[0];
    d.one = d.elements[n - 1];
    b.view_ = FiniteAlgebra::from_data(d);
    return b;
}

int BooleanAlgebra::index_of(const std::string& name) const {
    if (name == "1") return full();
    if (auto i = view_.try_index(name)) return *i;
    throw error("'" + name + "' is not an element of " + view_.name());
}

bool is_boolean(const FiniteAlgebra& a) {
    FiniteAlgebra r = a.has_j2() ? a.reduct() : a;
    if (!passes(r, AxiomSetName::IBSL)) return false;
    return check_identity(r, parse_identity("x | -x = 1")).holds;
}

BooleanConversion boolean_from_algebra(const FiniteAlgebra& a) {
    if (!is_boolean(a)) throw error("'" + a.name() + "' is not a Boolean algebra");
    const int n = a.size();
    auto leq = [&](int x, int y) { return a.meet(x, y) == x; };

    std::vector<int> atoms;  // minimal non-zero elements
    for (int x = 0; x < n; ++x) {
        if (x == a.zero()) continue;
        bool minimal = true;
        for (int y = 0; y < n && minimal; ++y)
            if (y != a.zero() && y != x && leq(y, x)) minimal = false;
        if (minimal) atoms.push_back(x);
    }
    std::vector<std::string> atom_names;
    for (int at : atoms) atom_names.push_back(a.element(at));
    BooleanAlgebra b = BooleanAlgebra::from_atoms(atom_names);
    if (b.size() != n)
        throw defect("boolean_from_algebra: carrier size " + std::to_string(n) +
                     " does not match 2^" + std::to_string(atoms.size()));

    std::vector<int> mask_of(n, 0);
    for (int x = 0; x < n; ++x)
        for (size_t i = 0; i < atoms.size(); ++i)
            if (leq(atoms[i], x)) mask_of[x] |= 1 << i;
    // the mask assignment must be a bijective homomorphism onto the powerset
    std::vector<int> back(n, -1);
    for (int x = 0; x < n; ++x) {
        if (back[mask_of[x]] != -1) throw defect("boolean_from_algebra: atom masks collide");
        back[mask_of[x]] = x;
    }
    Homomorphism h{a, b.view(), mask_of};
    if (auto bad = h.check())
        throw defect("boolean_from_algebra: canonical map is not an isomorphism: " + *bad);
    return {std::move(b), std::move(mask_of)};
}

std::optional<std::string> validate_filter(const BooleanAlgebra& b, const Filter& f) {
    std::set<int> members(f.members.begin(), f.members.end());
    for (int m : members)
        if (m < 0 || m >= b.size()) return "filter member out of range";
    if (!members.count(b.full())) return "filter does not contain 1";
    for (int x : members) {
        for (int y = 0; y < b.size(); ++y)
            if (b.leq(x, y) && !members.count(y))
                return "filter not upward closed: contains " + b.element_name(x) + " but not " +
                       b.element_name(y);
        for (int y : members)
            if (!members.count(b.meet(x, y)))
                return "filter not meet closed at " + b.element_name(x) + "," + b.element_name(y);
    }
    return std::nullopt;
}

Filter principal_filter(const BooleanAlgebra& b, int g) {
    if (g < 0 || g >= b.size()) throw error("principal_filter: element out of range");
    Filter f;
    for (int x = 0; x < b.size(); ++x)
        if (b.leq(g, x)) f.members.push_back(x);
    return f;
}

Partition filter_congruence(const BooleanAlgebra& b, const Filter& f) {
    if (auto bad = validate_filter(b, f)) throw error("filter_congruence: " + *bad);
    std::set<int> members(f.members.begin(), f.members.end());
    const int n = b.size();
    // (-a | b) & (-b | a) in F is an equivalence; group by scanning
    std::vector<int> labels(n, -1);
    int next = 0;
    for (int x = 0; x < n; ++x) {
        if (labels[x] != -1) continue;
        labels[x] = next;
        for (int y = x + 1; y < n; ++y) {
            if (labels[y] != -1) continue;
            int biimp = b.meet(b.join(b.complement(x), y), b.join(b.complement(y), x));
            if (members.count(biimp)) labels[y] = next;
        }
        ++next;
    }
    Partition p = Partition::from_labels(labels);
    std::string why;
    if (!is_congruence(b.view(), p, &why)) throw defect("filter congruence is not one: " + why);
    return p;
}

Quotient quotient_by_filter(const BooleanAlgebra& b, const Filter& f) {
    return quotient_algebra(b.view(), filter_congruence(b, f));
}

Filter kernel_filter(const BooleanAlgebra& b, const Homomorphism& h) {
    if (!h.source.same_tables(b.view()))
        throw error("kernel_filter: source of the homomorphism is not the given Boolean algebra");
    if (auto bad = h.check()) throw error("kernel_filter: not a homomorphism: " + *bad);
    Filter f;
    const int top = h.map[b.full()];
    for (int x = 0; x < b.size(); ++x)
        if (h.map[x] == top) f.members.push_back(x);
    if (auto bad = validate_filter(b, f))
        throw defect("kernel_filter: preimage of 1 is not a filter: " + *bad);
    return f;
}

int filter_generator(const BooleanAlgebra& b, const Filter& f) {
    if (auto bad = validate_filter(b, f)) throw error("filter_generator: " + *bad);
    int g = b.full();
    for (int m : f.members) g = b.meet(g, m);
    return g;
}

std::vector<std::vector<int>> enumerate_unit_meet_subsemilattices(const BooleanAlgebra& b) {
    const int n = b.size();
    const int one = b.full();
    std::vector<int> rest;
    for (int x = 0; x < n; ++x)
        if (x != one) rest.push_back(x);

    std::vector<std::vector<int>> out;
    const std::uint64_t limit = 1ull << rest.size();
    for (std::uint64_t pick = 0; pick < limit; ++pick) {
        std::vector<int> s;
        for (size_t i = 0; i < rest.size(); ++i)
            if (pick & (1ull << i)) s.push_back(rest[i]);
        s.push_back(one);
        std::sort(s.begin(), s.end());
        std::set<int> members(s.begin(), s.end());
        bool closed = true;
        for (int x : s)
            for (int y : s)
                if (!members.count(b.meet(x, y))) {
                    closed = false;
                    break;
                }
        if (closed) out.push_back(std::move(s));
    }
    return out;
}

}  // namespace bochvar
