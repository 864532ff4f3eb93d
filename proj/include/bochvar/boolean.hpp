#pragma once

#include <string>
#include <vector>

#include "bochvar/algebra.hpp"

namespace bochvar {

// ============================================================================
// Finite Boolean algebras as powersets of atoms
//
// Elements are atom subsets, indexed by bitmask (atom i = bit i) in
// ascending order. Canonical names: "0" for the empty set, otherwise the
// atom names joined by "+" in atom order; "1" is accepted as an input alias
// for the full set (and "0" doubles as the full-set name of the trivial,
// atomless algebra).
// ============================================================================

class BooleanAlgebra {
public:
    /// Throws on duplicate atom names. An empty list yields the trivial
    /// one-element algebra where 0 = 1.
    static BooleanAlgebra from_atoms(std::vector<std::string> atoms);

    int atom_count() const { return static_cast<int>(atoms_.size()); }
    int size() const { return 1 << atom_count(); }
    const std::vector<std::string>& atoms() const { return atoms_; }

    /// The operation-table view: and=intersection, or=union, not=complement,
    /// 0=empty, 1=full; no J2.
    const FiniteAlgebra& view() const { return view_; }

    const std::string& element_name(int mask) const { return view_.element(mask); }
    /// Accepts canonical names plus the "1" alias for the full set.
    int index_of(const std::string& name) const;

    int meet(int a, int b) const { return a & b; }
    int join(int a, int b) const { return a | b; }
    int complement(int a) const { return full() & ~a; }
    bool leq(int a, int b) const { return (a & b) == a; }
    int full() const { return size() - 1; }

private:
    std::vector<std::string> atoms_;
    FiniteAlgebra view_;
};

/// True iff a satisfies the IBSL identities plus x | -x = 1 (exhaustive).
bool is_boolean(const FiniteAlgebra& a);

/// Rebuilds an arbitrary Boolean operation-table algebra as a canonical
/// powerset algebra; atoms keep their original element names. mask_of maps
/// original element indices to masks. Throws when a is not Boolean.
struct BooleanConversion {
    BooleanAlgebra algebra;
    std::vector<int> mask_of;
};
BooleanConversion boolean_from_algebra(const FiniteAlgebra& a);

// ============================================================================
// Filters
// ============================================================================

/// A lattice filter stored extensionally: contains 1, upward closed, closed
/// under meet. Members are masks, ascending.
struct Filter {
    std::vector<int> members;
};

/// Nullopt when f is a filter of b, otherwise the first failed condition.
std::optional<std::string> validate_filter(const BooleanAlgebra& b, const Filter& f);

/// {x : g <= x}
Filter principal_filter(const BooleanAlgebra& b, int g);

/// The congruence relating a,b iff (-a | b) & (-b | a) lands in f.
Partition filter_congruence(const BooleanAlgebra& b, const Filter& f);

/// quotient_algebra over filter_congruence; the result is again Boolean.
Quotient quotient_by_filter(const BooleanAlgebra& b, const Filter& f);

/// The preimage class 1/ker h = {a : h(a) = h(1)} of a homomorphism whose
/// source is b's view. Always a (principal) filter at finite scale.
Filter kernel_filter(const BooleanAlgebra& b, const Homomorphism& h);
/// Least member of a filter; the generator when the filter is principal.
int filter_generator(const BooleanAlgebra& b, const Filter& f);

/// All subsets of the carrier that contain 1 and are closed under meet,
/// ordered by ascending member-set bitmask. Each entry is the sorted list
/// of member masks.
std::vector<std::vector<int>> enumerate_unit_meet_subsemilattices(const BooleanAlgebra& b);

}  // namespace bochvar
