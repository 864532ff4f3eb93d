#include "bochvar/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace bochvar {

namespace {

std::string cell(const std::string& table, const std::string& row, const std::string& col) {
    return table + "[" + row + "," + col + "]";
}

// Union-find over 0..n-1.
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);  // keep least index as representative
        parent[b] = a;
        return true;
    }
    std::vector<int> labels() const {
        UnionFind copy = *this;
        std::vector<int> out(parent.size());
        for (size_t i = 0; i < parent.size(); ++i) out[i] = copy.find(static_cast<int>(i));
        return out;
    }
};

}  // namespace

// ----------------------------------------------------------------------------
// validate_algebra
// ----------------------------------------------------------------------------

std::vector<std::string> validate_algebra(const AlgebraData& d) {
    std::vector<std::string> out;
    const int n = static_cast<int>(d.elements.size());
    if (n == 0) {
        out.push_back("carrier: empty element list");
        return out;
    }
    std::set<std::string> seen;
    for (const auto& e : d.elements) {
        if (!seen.insert(e).second) out.push_back("carrier: duplicate element '" + e + "'");
        if (e.empty()) out.push_back("carrier: empty element name");
    }
    auto known = [&](const std::string& e) { return seen.count(e) > 0; };

    for (auto [tab, name] : {std::pair{&d.and_table, "and"}, std::pair{&d.or_table, "or"}}) {
        if (static_cast<int>(tab->size()) != n) {
            out.push_back(std::string(name) + " table: " + std::to_string(tab->size()) +
                          " rows, expected " + std::to_string(n));
            continue;
        }
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>((*tab)[i].size()) != n) {
                out.push_back(std::string(name) + " table: row '" + d.elements[i] + "' has " +
                              std::to_string((*tab)[i].size()) + " cells, expected " +
                              std::to_string(n));
                continue;
            }
            for (int j = 0; j < n; ++j)
                if (!known((*tab)[i][j]))
                    out.push_back(cell(name, d.elements[i], d.elements[j]) + ": '" + (*tab)[i][j] +
                                  "' is not an element");
        }
    }

    auto check_unary = [&](const std::map<std::string, std::string>& m, const std::string& name) {
        for (const auto& e : d.elements)
            if (!m.count(e)) out.push_back(name + " table: no entry for element '" + e + "'");
        for (const auto& [k, v] : m) {
            if (!known(k)) out.push_back(name + " table: key '" + k + "' is not an element");
            else if (!known(v))
                out.push_back(name + "[" + k + "]: '" + v + "' is not an element");
        }
    };
    check_unary(d.not_table, "not");
    if (d.j2_table) check_unary(*d.j2_table, "j2");

    if (!known(d.zero)) out.push_back("zero: '" + d.zero + "' is not an element");
    if (!known(d.one)) out.push_back("one: '" + d.one + "' is not an element");
    return out;
}

// ----------------------------------------------------------------------------
// FiniteAlgebra
// ----------------------------------------------------------------------------

FiniteAlgebra FiniteAlgebra::from_data(const AlgebraData& d) {
    auto violations = validate_algebra(d);
    if (!violations.empty()) {
        std::ostringstream msg;
        msg << "invalid algebra '" << d.name << "':";
        for (const auto& v : violations) msg << "\n  " << v;
        throw error(msg.str());
    }
    FiniteAlgebra a;
    a.name_ = d.name;
    a.elements_ = d.elements;
    const int n = a.size();
    for (int i = 0; i < n; ++i) a.index_[a.elements_[i]] = i;
    auto idx = [&](const std::string& e) { return a.index_.at(e); };

    a.and_.assign(n, std::vector<int>(n));
    a.or_.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            a.and_[i][j] = idx(d.and_table[i][j]);
            a.or_[i][j] = idx(d.or_table[i][j]);
        }
    a.not_.resize(n);
    for (int i = 0; i < n; ++i) a.not_[i] = idx(d.not_table.at(a.elements_[i]));
    if (d.j2_table) {
        std::vector<int> t(n);
        for (int i = 0; i < n; ++i) t[i] = idx(d.j2_table->at(a.elements_[i]));
        a.j2_ = std::move(t);
    }
    a.zero_ = idx(d.zero);
    a.one_ = idx(d.one);
    return a;
}

int FiniteAlgebra::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw error("'" + name + "' is not an element of algebra '" + name_ + "'");
    return it->second;
}

std::optional<int> FiniteAlgebra::try_index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int FiniteAlgebra::j2(int a) const {
    if (!j2_) throw error("algebra '" + name_ + "' has no J2 operation");
    return (*j2_)[a];
}

FiniteAlgebra FiniteAlgebra::reduct() const {
    FiniteAlgebra r = *this;
    r.j2_.reset();
    return r;
}

FiniteAlgebra FiniteAlgebra::with_j2(std::vector<int> table, const std::string& new_name) const {
    if (static_cast<int>(table.size()) != size()) throw error("j2 table size mismatch");
    for (int v : table)
        if (v < 0 || v >= size()) throw error("j2 table entry out of range");
    FiniteAlgebra r = *this;
    r.j2_ = std::move(table);
    if (!new_name.empty()) r.name_ = new_name;
    return r;
}

FiniteAlgebra FiniteAlgebra::renamed(const std::map<std::string, std::string>& renaming,
                                     const std::string& new_name) const {
    AlgebraData d = to_data();
    auto rn = [&](const std::string& e) {
        auto it = renaming.find(e);
        return it == renaming.end() ? e : it->second;
    };
    d.name = new_name.empty() ? name_ : new_name;
    for (auto& e : d.elements) e = rn(e);
    for (auto& row : d.and_table)
        for (auto& c : row) c = rn(c);
    for (auto& row : d.or_table)
        for (auto& c : row) c = rn(c);
    std::map<std::string, std::string> nt;
    for (const auto& [k, v] : d.not_table) nt[rn(k)] = rn(v);
    d.not_table = std::move(nt);
    if (d.j2_table) {
        std::map<std::string, std::string> jt;
        for (const auto& [k, v] : *d.j2_table) jt[rn(k)] = rn(v);
        d.j2_table = std::move(jt);
    }
    d.zero = rn(d.zero);
    d.one = rn(d.one);
    return from_data(d);
}

AlgebraData FiniteAlgebra::to_data() const {
    AlgebraData d;
    d.name = name_;
    d.elements = elements_;
    const int n = size();
    d.and_table.assign(n, std::vector<std::string>(n));
    d.or_table.assign(n, std::vector<std::string>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            d.and_table[i][j] = elements_[and_[i][j]];
            d.or_table[i][j] = elements_[or_[i][j]];
        }
    for (int i = 0; i < n; ++i) d.not_table[elements_[i]] = elements_[not_[i]];
    if (j2_) {
        std::map<std::string, std::string> jt;
        for (int i = 0; i < n; ++i) jt[elements_[i]] = elements_[(*j2_)[i]];
        d.j2_table = std::move(jt);
    }
    d.zero = elements_[zero_];
    d.one = elements_[one_];
    return d;
}

bool FiniteAlgebra::same_tables(const FiniteAlgebra& o) const {
    return elements_ == o.elements_ && and_ == o.and_ && or_ == o.or_ && not_ == o.not_ &&
           j2_ == o.j2_ && zero_ == o.zero_ && one_ == o.one_;
}

FiniteAlgebra make_algebra(const std::string& name, const std::vector<std::string>& elements,
                           const std::vector<std::vector<std::string>>& and_rows,
                           const std::vector<std::vector<std::string>>& or_rows,
                           const std::map<std::string, std::string>& not_map,
                           const std::optional<std::map<std::string, std::string>>& j2_map,
                           const std::string& zero, const std::string& one) {
    AlgebraData d;
    d.name = name;
    d.elements = elements;
    d.and_table = and_rows;
    d.or_table = or_rows;
    d.not_table = not_map;
    d.j2_table = j2_map;
    d.zero = zero;
    d.one = one;
    return FiniteAlgebra::from_data(d);
}

// ----------------------------------------------------------------------------
// Partition
// ----------------------------------------------------------------------------

Partition Partition::from_labels(std::vector<int> raw) {
    Partition p;
    p.labels_.assign(raw.size(), -1);
    std::map<int, int> canon;
    for (size_t i = 0; i < raw.size(); ++i) {
        auto [it, fresh] = canon.emplace(raw[i], static_cast<int>(canon.size()));
        p.labels_[i] = it->second;
        (void)fresh;
    }
    p.block_count_ = static_cast<int>(canon.size());
    return p;
}

Partition Partition::identity(int n) {
    std::vector<int> l(n);
    std::iota(l.begin(), l.end(), 0);
    return from_labels(std::move(l));
}

Partition Partition::universal(int n) { return from_labels(std::vector<int>(n, 0)); }

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<int> raw(n, -1);
    int id = 0;
    for (const auto& b : blocks) {
        for (int e : b) {
            if (e < 0 || e >= n) throw error("partition block member out of range");
            if (raw[e] != -1) throw error("partition blocks overlap");
            raw[e] = id;
        }
        ++id;
    }
    for (int i = 0; i < n; ++i)
        if (raw[i] == -1) throw error("partition blocks do not cover the carrier");
    return from_labels(std::move(raw));
}

std::vector<std::vector<int>> Partition::blocks() const {
    std::vector<std::vector<int>> out(block_count_);
    for (int i = 0; i < size(); ++i) out[labels_[i]].push_back(i);
    return out;
}

bool Partition::refines(const Partition& other) const {
    if (size() != other.size()) throw error("partition size mismatch");
    std::map<int, int> image;
    for (int i = 0; i < size(); ++i) {
        auto [it, fresh] = image.emplace(labels_[i], other.labels_[i]);
        if (!fresh && it->second != other.labels_[i]) return false;
    }
    return true;
}

Partition Partition::join_with(const Partition& other) const {
    if (size() != other.size()) throw error("partition size mismatch");
    UnionFind uf(size());
    std::map<int, int> first_of_this, first_of_other;
    for (int i = 0; i < size(); ++i) {
        auto [a, fa] = first_of_this.emplace(labels_[i], i);
        if (!fa) uf.unite(a->second, i);
        auto [b, fb] = first_of_other.emplace(other.labels_[i], i);
        if (!fb) uf.unite(b->second, i);
    }
    return from_labels(uf.labels());
}

Partition Partition::meet_with(const Partition& other) const {
    if (size() != other.size()) throw error("partition size mismatch");
    std::vector<int> raw(size());
    std::map<std::pair<int, int>, int> canon;
    for (int i = 0; i < size(); ++i) {
        auto key = std::make_pair(labels_[i], other.labels_[i]);
        auto [it, fresh] = canon.emplace(key, static_cast<int>(canon.size()));
        raw[i] = it->second;
        (void)fresh;
    }
    return from_labels(std::move(raw));
}

std::string partition_to_string(const FiniteAlgebra& a, const Partition& p) {
    std::ostringstream os;
    os << "{";
    bool first_block = true;
    for (const auto& b : p.blocks()) {
        if (!first_block) os << ",";
        first_block = false;
        os << "{";
        for (size_t i = 0; i < b.size(); ++i) {
            if (i) os << ",";
            os << a.element(b[i]);
        }
        os << "}";
    }
    os << "}";
    return os.str();
}

// ----------------------------------------------------------------------------
// Congruences
// ----------------------------------------------------------------------------

bool is_congruence(const FiniteAlgebra& a, const Partition& p, std::string* why) {
    if (p.size() != a.size()) throw error("partition does not match carrier size");
    const int n = a.size();
    auto complain = [&](const std::string& op, int x, int y, int gx, int gy) {
        if (why)
            *why = op + " incompatible: " + a.element(x) + " ~ " + a.element(y) + " but " +
                   a.element(gx) + " !~ " + a.element(gy);
        return false;
    };
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (!p.same(x, y)) continue;
            if (!p.same(a.neg(x), a.neg(y))) return complain("not", x, y, a.neg(x), a.neg(y));
            if (a.has_j2() && !p.same(a.j2(x), a.j2(y)))
                return complain("j2", x, y, a.j2(x), a.j2(y));
            for (int c = 0; c < n; ++c) {
                if (!p.same(a.meet(x, c), a.meet(y, c)))
                    return complain("and", x, y, a.meet(x, c), a.meet(y, c));
                if (!p.same(a.meet(c, x), a.meet(c, y)))
                    return complain("and", x, y, a.meet(c, x), a.meet(c, y));
                if (!p.same(a.join(x, c), a.join(y, c)))
                    return complain("or", x, y, a.join(x, c), a.join(y, c));
                if (!p.same(a.join(c, x), a.join(c, y)))
                    return complain("or", x, y, a.join(c, x), a.join(c, y));
            }
        }
    return true;
}

Partition principal_congruence(const FiniteAlgebra& a, int x, int y) {
    const int n = a.size();
    if (x < 0 || x >= n || y < 0 || y >= n) throw error("principal_congruence: element out of range");
    UnionFind uf(n);
    std::vector<std::pair<int, int>> work;
    auto push = [&](int u, int v) {
        if (uf.unite(u, v)) work.emplace_back(u, v);
    };
    push(x, y);
    while (!work.empty()) {
        auto [u, v] = work.back();
        work.pop_back();
        // close under one-step unary polynomial translations
        push(a.neg(u), a.neg(v));
        if (a.has_j2()) push(a.j2(u), a.j2(v));
        for (int c = 0; c < n; ++c) {
            push(a.meet(u, c), a.meet(v, c));
            push(a.meet(c, u), a.meet(c, v));
            push(a.join(u, c), a.join(v, c));
            push(a.join(c, u), a.join(c, v));
        }
    }
    return Partition::from_labels(uf.labels());
}

std::vector<Partition> all_congruences(const FiniteAlgebra& a) {
    const int n = a.size();
    std::set<Partition> found;
    std::vector<Partition> list;
    auto push = [&](Partition p) {
        if (found.insert(p).second) list.push_back(std::move(p));
    };
    push(Partition::identity(n));
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) push(principal_congruence(a, x, y));

    // close under pairwise joins; the list grows while the loop runs
    for (size_t i = 0; i < list.size(); ++i)
        for (size_t j = 0; j < i; ++j) push(list[i].join_with(list[j]));

    std::vector<Partition> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const Partition& p, const Partition& q) {
        if (p.block_count() != q.block_count()) return p.block_count() > q.block_count();
        return p.labels() < q.labels();
    });
    return out;
}

SubdirectResult is_subdirectly_irreducible(const FiniteAlgebra& a) {
    if (a.size() < 2) throw error("subdirect irreducibility is undefined for the trivial algebra");
    const int n = a.size();
    std::optional<Partition> monolith;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            Partition c = principal_congruence(a, x, y);
            monolith = monolith ? monolith->meet_with(c) : c;
            if (monolith->is_identity()) return {false, std::nullopt};
        }
    return {true, monolith};
}

// ----------------------------------------------------------------------------
// Homomorphisms
// ----------------------------------------------------------------------------

bool Homomorphism::is_bijective() const {
    if (source.size() != target.size()) return false;
    std::vector<bool> hit(target.size(), false);
    for (int v : map) {
        if (hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

Homomorphism Homomorphism::inverse() const {
    if (!is_bijective()) throw error("cannot invert a non-bijective homomorphism");
    std::vector<int> inv(map.size());
    for (size_t i = 0; i < map.size(); ++i) inv[map[i]] = static_cast<int>(i);
    return Homomorphism{target, source, std::move(inv)};
}

std::optional<std::string> Homomorphism::check() const {
    if (source.has_j2() != target.has_j2()) return "signature mismatch between source and target";
    if (static_cast<int>(map.size()) != source.size()) return "map is not total on the source";
    const int n = source.size();
    for (int v : map)
        if (v < 0 || v >= target.size()) return "map image out of range";
    if (map[source.zero()] != target.zero()) return "zero is not preserved";
    if (map[source.one()] != target.one()) return "one is not preserved";
    for (int x = 0; x < n; ++x) {
        if (map[source.neg(x)] != target.neg(map[x]))
            return "not is not preserved at " + source.element(x);
        if (source.has_j2() && map[source.j2(x)] != target.j2(map[x]))
            return "j2 is not preserved at " + source.element(x);
        for (int y = 0; y < n; ++y) {
            if (map[source.meet(x, y)] != target.meet(map[x], map[y]))
                return "and is not preserved at (" + source.element(x) + "," + source.element(y) + ")";
            if (map[source.join(x, y)] != target.join(map[x], map[y]))
                return "or is not preserved at (" + source.element(x) + "," + source.element(y) + ")";
        }
    }
    return std::nullopt;
}

namespace {

// Backtracking enumeration of homomorphisms a -> b. Partial assignments are
// propagated through constants and unary operations and checked against every
// binary application whose inputs and output are already assigned.
class HomSearch {
public:
    HomSearch(const FiniteAlgebra& a, const FiniteAlgebra& b, bool injective, bool first_only)
        : a_(a), b_(b), injective_(injective), first_only_(first_only) {}

    std::vector<std::vector<int>> run() {
        assign_.assign(a_.size(), -1);
        used_.assign(b_.size(), false);
        std::vector<std::pair<int, int>> trail;
        if (force(a_.zero(), b_.zero(), trail) && force(a_.one(), b_.one(), trail)) extend();
        undo(trail, 0);
        return std::move(results_);
    }

private:
    bool force(int x, int v, std::vector<std::pair<int, int>>& trail) {
        if (assign_[x] != -1) return assign_[x] == v;
        if (injective_ && used_[v]) return false;
        assign_[x] = v;
        used_[v] = true;
        trail.emplace_back(x, v);
        // unary propagation
        if (!force(a_.neg(x), b_.neg(v), trail)) return false;
        if (a_.has_j2() && !force(a_.j2(x), b_.j2(v), trail)) return false;
        // binary applications with both arguments assigned force their result
        for (int y = 0; y < a_.size(); ++y) {
            if (assign_[y] == -1) continue;
            if (!force(a_.meet(x, y), b_.meet(v, assign_[y]), trail)) return false;
            if (!force(a_.meet(y, x), b_.meet(assign_[y], v), trail)) return false;
            if (!force(a_.join(x, y), b_.join(v, assign_[y]), trail)) return false;
            if (!force(a_.join(y, x), b_.join(assign_[y], v), trail)) return false;
        }
        return true;
    }

    void undo(std::vector<std::pair<int, int>>& trail, size_t mark) {
        while (trail.size() > mark) {
            auto [x, v] = trail.back();
            trail.pop_back();
            assign_[x] = -1;
            used_[v] = false;
        }
    }

    void extend() {
        if (first_only_ && !results_.empty()) return;
        int x = -1;
        for (int i = 0; i < a_.size(); ++i)
            if (assign_[i] == -1) {
                x = i;
                break;
            }
        if (x == -1) {
            results_.push_back(assign_);
            return;
        }
        for (int v = 0; v < b_.size(); ++v) {
            std::vector<std::pair<int, int>> trail;
            if (force(x, v, trail)) extend();
            undo(trail, 0);
            if (first_only_ && !results_.empty()) return;
        }
    }

    const FiniteAlgebra& a_;
    const FiniteAlgebra& b_;
    bool injective_;
    bool first_only_;
    std::vector<int> assign_;
    std::vector<bool> used_;
    std::vector<std::vector<int>> results_;
};

}  // namespace

std::vector<Homomorphism> enumerate_homs(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    if (a.has_j2() != b.has_j2())
        throw error("enumerate_homs: signature mismatch (one algebra lacks J2)");
    std::vector<Homomorphism> out;
    for (auto& m : HomSearch(a, b, false, false).run()) out.push_back({a, b, std::move(m)});
    return out;
}

std::optional<Homomorphism> find_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    if (a.has_j2() != b.has_j2())
        throw error("find_isomorphism: signature mismatch (one algebra lacks J2)");
    if (a.size() != b.size()) return std::nullopt;
    auto found = HomSearch(a, b, true, true).run();
    if (found.empty()) return std::nullopt;
    Homomorphism h{a, b, std::move(found.front())};
    if (auto bad = h.inverse().check())
        throw defect("find_isomorphism: inverse of a bijective homomorphism failed: " + *bad);
    return h;
}

// ----------------------------------------------------------------------------
// Constructions
// ----------------------------------------------------------------------------

Quotient quotient_algebra(const FiniteAlgebra& a, const Partition& c) {
    std::string why;
    if (!is_congruence(a, c, &why)) throw error("quotient_algebra: not a congruence: " + why);
    auto blocks = c.blocks();
    const int m = static_cast<int>(blocks.size());

    AlgebraData d;
    d.name = a.name() + "/~";
    for (const auto& b : blocks) d.elements.push_back(a.element(b.front()));
    auto block_name = [&](int elt) { return d.elements[c.block_of(elt)]; };

    d.and_table.assign(m, std::vector<std::string>(m));
    d.or_table.assign(m, std::vector<std::string>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            d.and_table[i][j] = block_name(a.meet(blocks[i].front(), blocks[j].front()));
            d.or_table[i][j] = block_name(a.join(blocks[i].front(), blocks[j].front()));
        }
    for (int i = 0; i < m; ++i) d.not_table[d.elements[i]] = block_name(a.neg(blocks[i].front()));
    if (a.has_j2()) {
        std::map<std::string, std::string> jt;
        for (int i = 0; i < m; ++i) jt[d.elements[i]] = block_name(a.j2(blocks[i].front()));
        d.j2_table = std::move(jt);
    }
    d.zero = block_name(a.zero());
    d.one = block_name(a.one());

    FiniteAlgebra q = FiniteAlgebra::from_data(d);
    std::vector<int> proj(a.size());
    for (int i = 0; i < a.size(); ++i) proj[i] = c.block_of(i);
    Homomorphism p{a, q, std::move(proj)};
    if (auto bad = p.check()) throw defect("quotient projection is not a homomorphism: " + *bad);
    return {std::move(q), std::move(p)};
}

FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    if (a.has_j2() != b.has_j2())
        throw error("direct_product: signature mismatch (one factor lacks J2)");
    AlgebraData d;
    d.name = "(" + a.name() + "x" + b.name() + ")";
    const int na = a.size(), nb = b.size();
    auto pname = [&](int i, int j) { return "(" + a.element(i) + "," + b.element(j) + ")"; };
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) d.elements.push_back(pname(i, j));
    const int n = na * nb;
    auto at = [&](int i, int j) { return i * nb + j; };

    d.and_table.assign(n, std::vector<std::string>(n));
    d.or_table.assign(n, std::vector<std::string>(n));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            for (int k = 0; k < na; ++k)
                for (int l = 0; l < nb; ++l) {
                    d.and_table[at(i, j)][at(k, l)] = pname(a.meet(i, k), b.meet(j, l));
                    d.or_table[at(i, j)][at(k, l)] = pname(a.join(i, k), b.join(j, l));
                }
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) d.not_table[pname(i, j)] = pname(a.neg(i), b.neg(j));
    if (a.has_j2()) {
        std::map<std::string, std::string> jt;
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < nb; ++j) jt[pname(i, j)] = pname(a.j2(i), b.j2(j));
        d.j2_table = std::move(jt);
    }
    d.zero = pname(a.zero(), b.zero());
    d.one = pname(a.one(), b.one());
    return FiniteAlgebra::from_data(d);
}

Homomorphism product_projection(const FiniteAlgebra& product, const FiniteAlgebra& a,
                                const FiniteAlgebra& b, int coordinate) {
    if (coordinate != 0 && coordinate != 1) throw error("coordinate must be 0 or 1");
    if (product.size() != a.size() * b.size()) throw error("product size mismatch");
    std::vector<int> m(product.size());
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < b.size(); ++j) m[i * b.size() + j] = coordinate == 0 ? i : j;
    Homomorphism h{product, coordinate == 0 ? a : b, std::move(m)};
    if (auto bad = h.check()) throw defect("product projection failed: " + *bad);
    return h;
}

std::vector<int> subuniverse_generated(const FiniteAlgebra& a, const std::vector<int>& seed) {
    std::vector<bool> in(a.size(), false);
    std::vector<int> stack;
    auto add = [&](int e) {
        if (e < 0 || e >= a.size()) throw error("subuniverse_generated: element out of range");
        if (!in[e]) {
            in[e] = true;
            stack.push_back(e);
        }
    };
    add(a.zero());
    add(a.one());
    for (int e : seed) add(e);
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        add(a.neg(x));
        if (a.has_j2()) add(a.j2(x));
        for (int y = 0; y < a.size(); ++y) {
            if (!in[y]) continue;
            add(a.meet(x, y));
            add(a.meet(y, x));
            add(a.join(x, y));
            add(a.join(y, x));
        }
    }
    std::vector<int> out;
    for (int i = 0; i < a.size(); ++i)
        if (in[i]) out.push_back(i);
    return out;
}

FiniteAlgebra subalgebra(const FiniteAlgebra& a, const std::vector<int>& universe,
                         const std::string& name) {
    std::vector<int> u = universe;
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    std::vector<int> pos(a.size(), -1);
    for (size_t i = 0; i < u.size(); ++i) pos[u[i]] = static_cast<int>(i);
    auto member = [&](int e) { return pos[e] != -1; };
    if (!member(a.zero()) || !member(a.one())) throw error("subalgebra: constants not in universe");

    AlgebraData d;
    d.name = name.empty() ? a.name() + "|sub" : name;
    for (int e : u) d.elements.push_back(a.element(e));
    const int m = static_cast<int>(u.size());
    d.and_table.assign(m, std::vector<std::string>(m));
    d.or_table.assign(m, std::vector<std::string>(m));
    auto req = [&](int e) {
        if (!member(e)) throw error("subalgebra: universe not closed under the operations");
        return a.element(e);
    };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            d.and_table[i][j] = req(a.meet(u[i], u[j]));
            d.or_table[i][j] = req(a.join(u[i], u[j]));
        }
    for (int i = 0; i < m; ++i) d.not_table[d.elements[i]] = req(a.neg(u[i]));
    if (a.has_j2()) {
        std::map<std::string, std::string> jt;
        for (int i = 0; i < m; ++i) jt[d.elements[i]] = req(a.j2(u[i]));
        d.j2_table = std::move(jt);
    }
    d.zero = a.element(a.zero());
    d.one = a.element(a.one());
    return FiniteAlgebra::from_data(d);
}

}  // namespace bochvar
