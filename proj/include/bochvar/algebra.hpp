#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bochvar/errors.hpp"

namespace bochvar {

// ============================================================================
// Raw operation-table data
// ============================================================================

/// Unvalidated operation tables in the signature <and, or, not, j2, 0, 1>.
/// This is the shape algebra files parse into; validate_algebra reports its
/// defects without throwing. j2 is optional: its absence marks a J2-free
/// reduct.
struct AlgebraData {
    std::string name;
    std::vector<std::string> elements;  // carrier, in declaration order
    std::vector<std::vector<std::string>> and_table;  // row-major, element order
    std::vector<std::vector<std::string>> or_table;
    std::map<std::string, std::string> not_table;
    std::optional<std::map<std::string, std::string>> j2_table;
    std::string zero;
    std::string one;
};

/// Checks totality and closure of every table plus the distinguished
/// constants. Returns one line per violation, each naming the table, the
/// offending cell and the reason; empty means the data is a well-formed
/// finite algebra.
std::vector<std::string> validate_algebra(const AlgebraData& data);

// ============================================================================
// FiniteAlgebra
// ============================================================================

/// An operation-table algebra over <and, or, not, [j2], 0, 1>. Immutable
/// after construction; all operations work on element indices (positions in
/// the declared carrier order), with names kept for rendering and files.
class FiniteAlgebra {
public:
    /// Empty placeholder; every usable instance comes from from_data.
    FiniteAlgebra() = default;

    /// Validates and builds; throws bochvar::error listing all violations.
    static FiniteAlgebra from_data(const AlgebraData& data);

    int size() const { return static_cast<int>(elements_.size()); }
    bool has_j2() const { return j2_.has_value(); }
    const std::string& name() const { return name_; }

    const std::vector<std::string>& elements() const { return elements_; }
    const std::string& element(int i) const { return elements_.at(i); }
    int index_of(const std::string& name) const;
    std::optional<int> try_index(const std::string& name) const;

    int meet(int a, int b) const { return and_[a][b]; }
    int join(int a, int b) const { return or_[a][b]; }
    int neg(int a) const { return not_[a]; }
    int j2(int a) const;
    int zero() const { return zero_; }
    int one() const { return one_; }

    /// Same carrier without the j2 table.
    FiniteAlgebra reduct() const;
    /// Same carrier with the given j2 table attached.
    FiniteAlgebra with_j2(std::vector<int> table, const std::string& new_name = "") const;
    /// Copy with every element renamed through the map (must be injective).
    FiniteAlgebra renamed(const std::map<std::string, std::string>& renaming,
                          const std::string& new_name = "") const;

    AlgebraData to_data() const;

    /// Structural equality: same carrier names in the same order, same
    /// tables, same constants, same signature. The name field is metadata
    /// and is ignored.
    bool same_tables(const FiniteAlgebra& other) const;

private:
    std::string name_;
    std::vector<std::string> elements_;
    std::map<std::string, int> index_;
    std::vector<std::vector<int>> and_;
    std::vector<std::vector<int>> or_;
    std::vector<int> not_;
    std::optional<std::vector<int>> j2_;
    int zero_ = 0;
    int one_ = 0;
};

/// Convenience builder from name tables (throws on invalid data).
FiniteAlgebra make_algebra(const std::string& name,
                           const std::vector<std::string>& elements,
                           const std::vector<std::vector<std::string>>& and_rows,
                           const std::vector<std::vector<std::string>>& or_rows,
                           const std::map<std::string, std::string>& not_map,
                           const std::optional<std::map<std::string, std::string>>& j2_map,
                           const std::string& zero, const std::string& one);

// ============================================================================
// Partitions / congruences
// ============================================================================

/// A partition of {0..n-1} in canonical form: blocks are numbered by first
/// occurrence, members ascending. Used to represent congruences; the
/// compatibility check against a specific algebra lives in is_congruence.
class Partition {
public:
    static Partition identity(int n);
    static Partition universal(int n);
    static Partition from_labels(std::vector<int> raw_labels);
    static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

    int size() const { return static_cast<int>(labels_.size()); }
    int block_count() const { return block_count_; }
    int block_of(int i) const { return labels_.at(i); }
    bool same(int a, int b) const { return labels_.at(a) == labels_.at(b); }
    const std::vector<int>& labels() const { return labels_; }
    std::vector<std::vector<int>> blocks() const;

    bool is_identity() const { return block_count_ == size(); }
    bool is_universal() const { return block_count_ <= 1; }

    /// Every block of this partition is contained in a block of other.
    bool refines(const Partition& other) const;
    /// Join as equivalence relations (transitive closure of the union);
    /// for congruences of the same algebra this is the congruence join.
    Partition join_with(const Partition& other) const;
    /// Common refinement (intersection of the relations).
    Partition meet_with(const Partition& other) const;

    auto operator<=>(const Partition& other) const { return labels_ <=> other.labels_; }
    bool operator==(const Partition& other) const = default;

private:
    std::vector<int> labels_;
    int block_count_ = 0;
};

/// Renders blocks with element names, e.g. "{{0,1},{half}}".
std::string partition_to_string(const FiniteAlgebra& a, const Partition& p);

/// True iff p is compatible with every operation of a. When it is not,
/// *why (if given) receives a description of the first violation.
bool is_congruence(const FiniteAlgebra& a, const Partition& p, std::string* why = nullptr);

/// Least congruence collapsing x and y: closes the pair under one-step
/// unary polynomial translations of the basic operations until fixpoint
/// (union-find supplies the equivalence closure).
Partition principal_congruence(const FiniteAlgebra& a, int x, int y);

/// The full congruence lattice: all principal congruences closed under
/// pairwise join, plus the identity. Sorted with finer congruences first.
std::vector<Partition> all_congruences(const FiniteAlgebra& a);

struct SubdirectResult {
    bool irreducible = false;
    std::optional<Partition> monolith;  // least non-identity congruence
};

/// The monolith is computed as the common refinement of all non-identity
/// principal congruences; a is subdirectly irreducible iff that relation
/// is still non-identity. Rejects one-element carriers.
SubdirectResult is_subdirectly_irreducible(const FiniteAlgebra& a);

// ============================================================================
// Homomorphisms
// ============================================================================

struct Homomorphism {
    FiniteAlgebra source;
    FiniteAlgebra target;
    std::vector<int> map;  // source index -> target index

    int operator()(int i) const { return map.at(i); }
    bool is_bijective() const;
    Homomorphism inverse() const;  // requires bijective
    /// Exhaustive preservation check; nullopt when the map is a
    /// homomorphism, otherwise a description of the first failure.
    std::optional<std::string> check() const;
};

/// All operation-preserving maps a -> b, by backtracking with constant and
/// unary-operation propagation. Requires matching signatures. Deterministic
/// order: lexicographic in the assignment of a's carrier.
std::vector<Homomorphism> enumerate_homs(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// First bijective homomorphism found (its inverse is automatically a
/// homomorphism for total finite algebras, and is verified anyway).
std::optional<Homomorphism> find_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b);

// ============================================================================
// Constructions
// ============================================================================

struct Quotient {
    FiniteAlgebra algebra;
    Homomorphism projection;
};

/// Quotient by a congruence. Blocks are named by their least member in
/// element order. Throws if c is not compatible with some operation.
Quotient quotient_algebra(const FiniteAlgebra& a, const Partition& c);

/// Componentwise product; carrier is ordered pairs "(x,y)" with the left
/// factor varying slowest. Signatures must match.
FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b);
Homomorphism product_projection(const FiniteAlgebra& product, const FiniteAlgebra& a,
                                const FiniteAlgebra& b, int coordinate);

/// Least subuniverse containing the seed and both constants, closed under
/// every operation. Returns ascending element indices.
std::vector<int> subuniverse_generated(const FiniteAlgebra& a, const std::vector<int>& seed);

/// Restriction of a to a subuniverse (throws if not closed).
FiniteAlgebra subalgebra(const FiniteAlgebra& a, const std::vector<int>& universe,
                         const std::string& name = "");

}  // namespace bochvar
