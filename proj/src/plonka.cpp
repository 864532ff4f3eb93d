#include "bochvar/plonka.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "bochvar/axioms.hpp"

namespace bochvar {

namespace {

// Reflexive-transitive closure of the declared order pairs.
std::vector<std::vector<bool>> close_order(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) leq[i][i] = true;
    for (auto [i, j] : pairs) leq[i][j] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (leq[i][k])
                for (int j = 0; j < n; ++j)
                    if (leq[k][j]) leq[i][j] = true;
    return leq;
}

struct OrderShape {
    std::vector<std::vector<int>> join;  // -1 where no least upper bound exists
    int bottom = -1;                     // -1 when there is no least element
    std::vector<std::string> problems;
};

OrderShape analyze_order(const std::vector<std::string>& names,
                         const std::vector<std::vector<bool>>& leq) {
    const int n = static_cast<int>(names.size());
    OrderShape shape;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (leq[i][j] && leq[j][i])
                shape.problems.push_back("index order: '" + names[i] + "' and '" + names[j] +
                                         "' are mutually comparable (not antisymmetric)");
    shape.join.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int best = -1;
            for (int u = 0; u < n; ++u) {
                if (!leq[i][u] || !leq[j][u]) continue;
                if (best == -1 || leq[u][best]) best = u;
            }
            if (best != -1) {
                // least upper bound only if below every upper bound
                for (int u = 0; u < n; ++u)
                    if (leq[i][u] && leq[j][u] && !leq[best][u]) {
                        best = -1;
                        break;
                    }
            }
            shape.join[i][j] = best;
            if (best == -1)
                shape.problems.push_back("index order: '" + names[i] + "' and '" + names[j] +
                                         "' have no join");
        }
    for (int b = 0; b < n; ++b) {
        bool least = true;
        for (int j = 0; j < n; ++j) least = least && leq[b][j];
        if (least) {
            shape.bottom = b;
            break;
        }
    }
    if (shape.bottom == -1) shape.problems.push_back("index order: no least element");
    return shape;
}

bool is_fibre_hom(const FiniteAlgebra& src, const FiniteAlgebra& dst, const std::vector<int>& m,
                  std::string* why) {
    Homomorphism h{src, dst, m};
    auto bad = h.check();
    if (bad && why) *why = *bad;
    return !bad;
}

}  // namespace

// ----------------------------------------------------------------------------
// validate_system / construction
// ----------------------------------------------------------------------------

SystemReport validate_system(const SystemData& d) {
    SystemReport report;
    auto& out = report.violations;
    const int n = static_cast<int>(d.index_elements.size());
    if (n == 0) {
        out.push_back("index: empty");
        return report;
    }
    std::map<std::string, int> index;
    for (int i = 0; i < n; ++i)
        if (!index.emplace(d.index_elements[i], i).second)
            out.push_back("index: duplicate element '" + d.index_elements[i] + "'");

    std::vector<std::pair<int, int>> pairs;
    for (const auto& [a, b] : d.order) {
        auto ia = index.find(a), ib = index.find(b);
        if (ia == index.end()) out.push_back("order: unknown index '" + a + "'");
        if (ib == index.end()) out.push_back("order: unknown index '" + b + "'");
        if (ia != index.end() && ib != index.end()) pairs.emplace_back(ia->second, ib->second);
    }
    if (!out.empty()) return report;

    auto leq = close_order(n, pairs);
    OrderShape shape = analyze_order(d.index_elements, leq);
    for (auto& p : shape.problems) out.push_back(p);

    // fibres: present, well-formed, same signature, disjoint carriers
    std::vector<FiniteAlgebra> fibres;
    for (int i = 0; i < n; ++i) {
        auto it = d.fibres.find(d.index_elements[i]);
        if (it == d.fibres.end()) {
            out.push_back("fibres: missing algebra for index '" + d.index_elements[i] + "'");
            return report;
        }
        auto violations = validate_algebra(it->second);
        for (auto& v : violations)
            out.push_back("fibre '" + d.index_elements[i] + "': " + v);
        if (!violations.empty()) return report;
        fibres.push_back(FiniteAlgebra::from_data(it->second));
    }
    for (size_t i = 1; i < fibres.size(); ++i)
        if (fibres[i].has_j2() != fibres[0].has_j2()) {
            out.push_back("fibres: mixed signatures (some have J2, some do not)");
            return report;
        }
    std::map<std::string, std::string> owner;
    for (int i = 0; i < n; ++i)
        for (const auto& e : fibres[i].elements()) {
            auto [it, fresh] = owner.emplace(e, d.index_elements[i]);
            if (!fresh)
                out.push_back("fibres: element '" + e + "' appears in both fibre '" + it->second +
                              "' and fibre '" + d.index_elements[i] + "'");
        }
    if (!out.empty()) return report;

    // homs: resolve given maps, derive the rest along the order
    std::map<std::pair<int, int>, std::vector<int>> homs;
    for (const auto& [key, m] : d.homs) {
        auto ia = index.find(key.first), ib = index.find(key.second);
        if (ia == index.end() || ib == index.end()) {
            out.push_back("homs: unknown index in '" + key.first + "->" + key.second + "'");
            continue;
        }
        if (!leq[ia->second][ib->second]) {
            out.push_back("homs: '" + key.first + "->" + key.second +
                          "' is not an ordered pair of the index");
            continue;
        }
        const FiniteAlgebra& src = fibres[ia->second];
        const FiniteAlgebra& dst = fibres[ib->second];
        std::vector<int> table(src.size(), -1);
        for (int e = 0; e < src.size(); ++e) {
            auto it = m.find(src.element(e));
            if (it == m.end()) {
                out.push_back("hom " + key.first + "->" + key.second + ": no image for '" +
                              src.element(e) + "'");
                continue;
            }
            auto img = dst.try_index(it->second);
            if (!img) {
                out.push_back("hom " + key.first + "->" + key.second + ": image '" + it->second +
                              "' is not in the target fibre");
                continue;
            }
            table[e] = *img;
        }
        if (std::find(table.begin(), table.end(), -1) == table.end())
            homs[{ia->second, ib->second}] = std::move(table);
    }
    if (!out.empty()) return report;

    for (int i = 0; i < n; ++i) {
        std::vector<int> id(fibres[i].size());
        for (int e = 0; e < fibres[i].size(); ++e) id[e] = e;
        auto [it, fresh] = homs.emplace(std::make_pair(i, i), id);
        if (!fresh && it->second != id)
            out.push_back("hom " + d.index_elements[i] + "->" + d.index_elements[i] +
                          " is not the identity");
    }

    // derive missing maps by composing along the order until a fixpoint
    bool grew = true;
    while (grew) {
        grew = false;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (!leq[i][j] || homs.count({i, j})) continue;
                for (int k = 0; k < n; ++k) {
                    if (k == i || k == j || !leq[i][k] || !leq[k][j]) continue;
                    auto first = homs.find({i, k});
                    auto second = homs.find({k, j});
                    if (first == homs.end() || second == homs.end()) continue;
                    std::vector<int> composed(fibres[i].size());
                    for (int e = 0; e < fibres[i].size(); ++e)
                        composed[e] = second->second[first->second[e]];
                    homs[{i, j}] = std::move(composed);
                    grew = true;
                    break;
                }
            }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (leq[i][j] && !homs.count({i, j}))
                out.push_back("homs: no map (given or derivable) for " + d.index_elements[i] +
                              "->" + d.index_elements[j]);
    if (!out.empty()) return report;

    // every map is a homomorphism; compositions agree on all chains
    for (const auto& [key, m] : homs) {
        std::string why;
        if (!is_fibre_hom(fibres[key.first], fibres[key.second], m, &why))
            out.push_back("hom " + d.index_elements[key.first] + "->" +
                          d.index_elements[key.second] + " is not a homomorphism: " + why);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (!leq[i][j] || !leq[j][k]) continue;
                const auto& pij = homs.at({i, j});
                const auto& pjk = homs.at({j, k});
                const auto& pik = homs.at({i, k});
                for (int e = 0; e < fibres[i].size(); ++e)
                    if (pjk[pij[e]] != pik[e]) {
                        out.push_back("compatibility: p_" + d.index_elements[j] + "," +
                                      d.index_elements[k] + " . p_" + d.index_elements[i] + "," +
                                      d.index_elements[j] + " != p_" + d.index_elements[i] + "," +
                                      d.index_elements[k] + " at '" + fibres[i].element(e) + "'");
                        break;
                    }
            }
    if (!out.empty()) return report;

    // informational facts
    report.all_surjective = true;
    for (const auto& [key, m] : homs) {
        std::set<int> image(m.begin(), m.end());
        if (static_cast<int>(image.size()) != fibres[key.second].size())
            report.all_surjective = false;
    }
    if (shape.bottom >= 0)
        for (int i = 0; i < n; ++i) {
            if (i == shape.bottom || !leq[shape.bottom][i]) continue;
            const auto& m = homs.at({shape.bottom, i});
            std::set<int> image(m.begin(), m.end());
            if (static_cast<int>(image.size()) == fibres[shape.bottom].size())
                report.injective_from_bottom.push_back(d.index_elements[i]);
        }
    return report;
}

SemilatticeDirectSystem SemilatticeDirectSystem::from_data(const SystemData& d) {
    SystemReport report = validate_system(d);
    if (!report.ok()) {
        std::ostringstream msg;
        msg << "invalid semilattice direct system:";
        for (const auto& v : report.violations) msg << "\n  " << v;
        throw error(msg.str());
    }
    const int n = static_cast<int>(d.index_elements.size());
    std::map<std::string, int> index;
    for (int i = 0; i < n; ++i) index[d.index_elements[i]] = i;
    std::vector<std::pair<int, int>> pairs;
    for (const auto& [a, b] : d.order) pairs.emplace_back(index.at(a), index.at(b));
    auto leq = close_order(n, pairs);
    std::vector<FiniteAlgebra> fibres;
    for (const auto& name : d.index_elements)
        fibres.push_back(FiniteAlgebra::from_data(d.fibres.at(name)));

    std::map<std::pair<int, int>, std::vector<int>> homs;
    for (const auto& [key, m] : d.homs) {
        int i = index.at(key.first), j = index.at(key.second);
        std::vector<int> table(fibres[i].size());
        for (int e = 0; e < fibres[i].size(); ++e)
            table[e] = fibres[j].index_of(m.at(fibres[i].element(e)));
        homs[{i, j}] = std::move(table);
    }
    return from_parts(d.index_elements, std::move(leq), std::move(fibres), std::move(homs));
}

SemilatticeDirectSystem SemilatticeDirectSystem::from_parts(
    std::vector<std::string> index_names, std::vector<std::vector<bool>> leq,
    std::vector<FiniteAlgebra> fibres, std::map<std::pair<int, int>, std::vector<int>> homs) {
    SemilatticeDirectSystem s;
    s.index_names_ = std::move(index_names);
    s.leq_ = std::move(leq);
    s.fibres_ = std::move(fibres);
    const int n = s.index_count();

    OrderShape shape = analyze_order(s.index_names_, s.leq_);
    if (!shape.problems.empty()) throw error("index order: " + shape.problems.front());
    s.join_ = shape.join;
    s.bottom_ = shape.bottom;

    for (int i = 0; i < n; ++i) {
        std::vector<int> id(s.fibres_[i].size());
        for (int e = 0; e < s.fibres_[i].size(); ++e) id[e] = e;
        homs.emplace(std::make_pair(i, i), std::move(id));
    }
    // derive any missing composites
    bool grew = true;
    while (grew) {
        grew = false;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (!s.leq_[i][j] || homs.count({i, j})) continue;
                for (int k = 0; k < n; ++k) {
                    if (k == i || k == j || !s.leq_[i][k] || !s.leq_[k][j]) continue;
                    auto f = homs.find({i, k});
                    auto g = homs.find({k, j});
                    if (f == homs.end() || g == homs.end()) continue;
                    std::vector<int> composed(s.fibres_[i].size());
                    for (int e = 0; e < s.fibres_[i].size(); ++e)
                        composed[e] = g->second[f->second[e]];
                    homs[{i, j}] = std::move(composed);
                    grew = true;
                    break;
                }
            }
    }
    s.homs_ = std::move(homs);

    // audit: maps exist, are homomorphisms, and compose
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!s.leq_[i][j]) continue;
            auto it = s.homs_.find({i, j});
            if (it == s.homs_.end())
                throw defect("system: missing homomorphism " + s.index_names_[i] + "->" +
                             s.index_names_[j]);
            std::string why;
            if (!is_fibre_hom(s.fibres_[i], s.fibres_[j], it->second, &why))
                throw defect("system: p_" + s.index_names_[i] + "," + s.index_names_[j] +
                             " is not a homomorphism: " + why);
            for (int k = 0; k < n; ++k) {
                if (!s.leq_[j][k]) continue;
                const auto& pjk = s.homs_.at({j, k});
                const auto& pik = s.homs_.at({i, k});
                for (int e = 0; e < s.fibres_[i].size(); ++e)
                    if (pjk[it->second[e]] != pik[e])
                        throw defect("system: homomorphism compatibility fails on " +
                                     s.index_names_[i] + "<=" + s.index_names_[j] +
                                     "<=" + s.index_names_[k]);
            }
        }
    return s;
}

std::optional<int> SemilatticeDirectSystem::index_of(const std::string& name) const {
    for (int i = 0; i < index_count(); ++i)
        if (index_names_[i] == name) return i;
    return std::nullopt;
}

const std::vector<int>& SemilatticeDirectSystem::hom(int i, int j) const {
    auto it = homs_.find({i, j});
    if (it == homs_.end())
        throw error("no homomorphism " + index_names_.at(i) + "->" + index_names_.at(j));
    return it->second;
}

SystemData SemilatticeDirectSystem::to_data() const {
    SystemData d;
    d.index_elements = index_names_;
    for (int i = 0; i < index_count(); ++i)
        for (int j = 0; j < index_count(); ++j)
            if (i != j && leq_[i][j]) d.order.emplace_back(index_names_[i], index_names_[j]);
    for (int i = 0; i < index_count(); ++i) d.fibres[index_names_[i]] = fibres_[i].to_data();
    for (const auto& [key, m] : homs_) {
        if (key.first == key.second) continue;
        std::map<std::string, std::string> named;
        for (int e = 0; e < fibres_[key.first].size(); ++e)
            named[fibres_[key.first].element(e)] = fibres_[key.second].element(m[e]);
        d.homs[{index_names_[key.first], index_names_[key.second]}] = std::move(named);
    }
    return d;
}

// ----------------------------------------------------------------------------
// plonka_sum
// ----------------------------------------------------------------------------

PlonkaSum plonka_sum(const SemilatticeDirectSystem& s) {
    const int n = s.index_count();
    for (int i = 0; i < n; ++i)
        if (s.fibre(i).has_j2())
            throw error("plonka_sum: fibres must be J2-free (fibre '" + s.index_name(i) + "')");

    // global carrier: fibres in index order, elements in fibre order
    std::vector<int> fibre_of, pos_of;
    std::vector<std::pair<int, int>> locate;  // global -> (fibre, position)
    AlgebraData d;
    d.name = "plonka";
    std::vector<std::vector<int>> global(n);  // (fibre, position) -> global
    for (int i = 0; i < n; ++i) {
        global[i].resize(s.fibre(i).size());
        for (int e = 0; e < s.fibre(i).size(); ++e) {
            global[i][e] = static_cast<int>(d.elements.size());
            d.elements.push_back(s.fibre(i).element(e));
            fibre_of.push_back(i);
            pos_of.push_back(e);
            locate.emplace_back(i, e);
        }
    }
    const int total = static_cast<int>(d.elements.size());

    auto push = [&](int fibre, int pos, int target_fibre) {
        return s.hom(fibre, target_fibre)[pos];
    };
    d.and_table.assign(total, std::vector<std::string>(total));
    d.or_table.assign(total, std::vector<std::string>(total));
    for (int x = 0; x < total; ++x)
        for (int y = 0; y < total; ++y) {
            auto [fx, px] = locate[x];
            auto [fy, py] = locate[y];
            int k = s.join_index(fx, fy);
            const FiniteAlgebra& fk = s.fibre(k);
            int ax = push(fx, px, k), ay = push(fy, py, k);
            d.and_table[x][y] = fk.element(fk.meet(ax, ay));
            d.or_table[x][y] = fk.element(fk.join(ax, ay));
        }
    for (int x = 0; x < total; ++x) {
        auto [fx, px] = locate[x];
        d.not_table[d.elements[x]] = s.fibre(fx).element(s.fibre(fx).neg(px));
    }
    const FiniteAlgebra& bottom = s.fibre(s.bottom());
    d.zero = bottom.element(bottom.zero());
    d.one = bottom.element(bottom.one());

    FiniteAlgebra sum = FiniteAlgebra::from_data(d);
    return {sum, Decomposition{sum, s, std::move(fibre_of), std::move(pos_of)}};
}

// ----------------------------------------------------------------------------
// decompose
// ----------------------------------------------------------------------------

Decomposition decompose(const FiniteAlgebra& a) {
    if (a.has_j2()) throw error("decompose expects a J2-free algebra; take the reduct first");
    {
        AxiomReport r = check_axiom_set(a, AxiomSetName::IBSL);
        if (!r.all_hold) {
            const ItemVerdict* f = r.first_failure();
            throw error("decompose: input is not an involutive bisemilattice (" + f->label +
                        " fails" +
                        (f->counterexample ? " at " + valuation_to_string(*f->counterexample) : "") +
                        ")");
        }
    }
    const int n = a.size();
    auto same_fibre = [&](int x, int y) {
        return a.meet(x, a.join(x, y)) == x && a.meet(y, a.join(y, x)) == y;
    };

    std::vector<int> fibre_of(n, -1);
    std::vector<std::vector<int>> members;
    for (int x = 0; x < n; ++x) {
        if (fibre_of[x] != -1) continue;
        int id = static_cast<int>(members.size());
        members.push_back({});
        for (int y = x; y < n; ++y)
            if (fibre_of[y] == -1 && same_fibre(x, y)) {
                fibre_of[y] = id;
                members[id].push_back(y);
            }
    }
    const int m = static_cast<int>(members.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if ((fibre_of[x] == fibre_of[y]) != same_fibre(x, y))
                throw defect("decompose: fibre relation is not an equivalence on '" + a.name() +
                             "'");

    // index order: i <= j iff joins with fibre j land in fibre j
    std::vector<std::vector<int>> join_target(m, std::vector<int>(m, -1));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int t = fibre_of[a.join(x, y)];
            int& slot = join_target[fibre_of[x]][fibre_of[y]];
            if (slot == -1) slot = t;
            else if (slot != t)
                throw defect("decompose: join fibre depends on representatives in '" + a.name() +
                             "'");
        }
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) leq[i][j] = join_target[i][j] == j;

    // fibre algebras keep the source element names; constants are the
    // fibre's own bounds (meet/join of all members)
    std::vector<FiniteAlgebra> fibres;
    std::vector<std::string> index_names;
    std::vector<std::vector<int>> pos(m);
    for (int i = 0; i < m; ++i) {
        const auto& mem = members[i];
        int bot = mem.front(), top = mem.front();
        for (int e : mem) {
            bot = a.meet(bot, e);
            top = a.join(top, e);
        }
        AlgebraData fd;
        fd.name = a.name() + "[" + a.element(mem.front()) + "]";
        std::map<int, int> local;
        for (int e : mem) {
            local[e] = static_cast<int>(fd.elements.size());
            fd.elements.push_back(a.element(e));
        }
        const int sz = static_cast<int>(mem.size());
        fd.and_table.assign(sz, std::vector<std::string>(sz));
        fd.or_table.assign(sz, std::vector<std::string>(sz));
        for (int x = 0; x < sz; ++x)
            for (int y = 0; y < sz; ++y) {
                fd.and_table[x][y] = a.element(a.meet(mem[x], mem[y]));
                fd.or_table[x][y] = a.element(a.join(mem[x], mem[y]));
            }
        for (int x = 0; x < sz; ++x) fd.not_table[fd.elements[x]] = a.element(a.neg(mem[x]));
        fd.zero = a.element(bot);
        fd.one = a.element(top);
        fibres.push_back(FiniteAlgebra::from_data(fd));
        index_names.push_back(a.element(mem.front()));
        pos[i].assign(mem.begin(), mem.end());
    }

    // p_ij(x) = x & (x | b) for any b in fibre j
    std::map<std::pair<int, int>, std::vector<int>> homs;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (!leq[i][j] || i == j) continue;
            int witness = members[j].front();
            std::vector<int> table(members[i].size());
            for (size_t e = 0; e < members[i].size(); ++e) {
                int img = a.meet(members[i][e], a.join(members[i][e], witness));
                if (fibre_of[img] != j)
                    throw defect("decompose: projection left its target fibre in '" + a.name() +
                                 "'");
                table[e] = fibres[j].index_of(a.element(img));
            }
            homs[{i, j}] = std::move(table);
        }

    SemilatticeDirectSystem system = SemilatticeDirectSystem::from_parts(
        std::move(index_names), std::move(leq), std::move(fibres), std::move(homs));
    if (fibre_of[a.zero()] != system.bottom())
        throw defect("decompose: constants are not in the bottom fibre of '" + a.name() + "'");

    std::vector<int> position(n);
    for (int i = 0; i < m; ++i)
        for (size_t e = 0; e < members[i].size(); ++e) position[members[i][e]] = static_cast<int>(e);
    return Decomposition{a, std::move(system), std::move(fibre_of), std::move(position)};
}

int count_fixpoints(const FiniteAlgebra& a) {
    int count = 0;
    for (int i = 0; i < a.size(); ++i)
        if (a.neg(i) == i) ++count;
    return count;
}

}  // namespace bochvar
