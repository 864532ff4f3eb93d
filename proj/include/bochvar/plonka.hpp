#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bochvar/algebra.hpp"

namespace bochvar {

// ============================================================================
// Semilattice direct systems
//
// A family of J2-free algebras with pairwise disjoint carriers, indexed by a
// join-semilattice with least element, plus a compatible homomorphism
// p_ij : A_i -> A_j for every i <= j (p_ii = id, p_jk . p_ij = p_ik).
// ============================================================================

/// Raw input shape for a system. Only covering-pair homomorphisms are
/// required; compositions are derived and verified against any explicitly
/// supplied ones.
struct SystemData {
    std::vector<std::string> index_elements;  // declaration order
    std::vector<std::pair<std::string, std::string>> order;  // pairs i <= j
    std::map<std::string, AlgebraData> fibres;
    std::map<std::pair<std::string, std::string>, std::map<std::string, std::string>> homs;
};

struct SystemReport {
    std::vector<std::string> violations;
    bool all_surjective = false;
    /// Indices i != bottom whose p_{i0,i} is injective (relevant to whether
    /// the sum can carry a Bochvar structure).
    std::vector<std::string> injective_from_bottom;
    bool ok() const { return violations.empty(); }
};

SystemReport validate_system(const SystemData& data);

class SemilatticeDirectSystem {
public:
    /// Throws bochvar::error listing all violations found by validate_system.
    static SemilatticeDirectSystem from_data(const SystemData& data);

    /// Assembles a system from already-validated parts: leq must be a
    /// join-semilattice order on the indices and homs must contain a map for
    /// every related pair. Compatibility is re-verified (throws defect).
    static SemilatticeDirectSystem from_parts(std::vector<std::string> index_names,
                                              std::vector<std::vector<bool>> leq,
                                              std::vector<FiniteAlgebra> fibres,
                                              std::map<std::pair<int, int>, std::vector<int>> homs);

    int index_count() const { return static_cast<int>(index_names_.size()); }
    const std::string& index_name(int i) const { return index_names_.at(i); }
    std::optional<int> index_of(const std::string& name) const;
    bool leq(int i, int j) const { return leq_[i][j]; }
    int join_index(int i, int j) const { return join_[i][j]; }
    int bottom() const { return bottom_; }
    const FiniteAlgebra& fibre(int i) const { return fibres_.at(i); }
    /// Element map of p_ij; requires i <= j.
    const std::vector<int>& hom(int i, int j) const;

    SystemData to_data() const;

private:
    SemilatticeDirectSystem() = default;

    std::vector<std::string> index_names_;
    std::vector<std::vector<bool>> leq_;
    std::vector<std::vector<int>> join_;
    int bottom_ = 0;
    std::vector<FiniteAlgebra> fibres_;
    std::map<std::pair<int, int>, std::vector<int>> homs_;
};

// ============================================================================
// Płonka sums and decompositions
// ============================================================================

/// Ties a sum to its system: fibre_of/position_in_fibre locate each element
/// of the source inside the system's fibres.
struct Decomposition {
    FiniteAlgebra source;
    SemilatticeDirectSystem system;
    std::vector<int> fibre_of;
    std::vector<int> position_in_fibre;
};

struct PlonkaSum {
    FiniteAlgebra algebra;
    Decomposition decomposition;
};

/// Disjoint union of the fibres; an n-ary operation pushes its arguments to
/// the join of their indices and applies the fibre operation there, and the
/// constants are taken in the bottom fibre. Fibres must be J2-free.
PlonkaSum plonka_sum(const SemilatticeDirectSystem& s);

/// Inverse construction for a J2-free involutive bisemilattice (the IBSL
/// identities are checked first): elements a,b share a fibre iff
/// a&(a|b) = a and b&(b|a) = b, the index order follows where joins land,
/// and p_ij(a) = a&(a|b) for any b in the target fibre. The result
/// reconstructs the input via plonka_sum over the same carrier names.
Decomposition decompose(const FiniteAlgebra& a);

/// Number of negation fixpoints (carriers of trivial fibres). At most one
/// iff the algebra satisfies the SIBSL quasi-identity.
int count_fixpoints(const FiniteAlgebra& a);

}  // namespace bochvar
