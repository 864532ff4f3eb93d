#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bochvar/axioms.hpp"
#include "bochvar/plonka.hpp"

namespace bochvar {

// ============================================================================
// Structure theory of the variety generated by Bochvar algebras: forced J2
// extensions, exhaustive J2-table searches, the theta congruences used to
// pin down the subdirectly irreducible members, and the decomposition of the
// BA/SL join into open and dense parts.
// ============================================================================

/// Result of the forced J2 extension on an involutive bisemilattice with a
/// two-element bottom fibre: J2 maps the top of every non-trivial fibre to 1
/// and everything else to 0. That table is the only candidate, but it need
/// not satisfy the K axioms (see forbidden_search); on failure the verdict
/// carries the violated axiom.
struct JdefResult {
    std::optional<FiniteAlgebra> algebra;
    std::string failed_axiom;
    std::optional<Valuation> counterexample;
    bool forced() const { return algebra.has_value(); }
};

/// Requires a J2-free involutive bisemilattice whose bottom fibre has
/// exactly two elements (larger bottom fibres are refused: no forced rule
/// exists for them).
JdefResult jdef_extension(const FiniteAlgebra& a);

/// Exhaustive search for J2 tables turning the J2-free algebra a into a
/// member of the given catalog.
///
/// The candidate codomain for every element is pruned to the complemented
/// elements (axiom shape J2 x | -J2 x = 1), then per-element constraints
/// that are pointwise instances of axioms valid in every K-member cut the
/// grid further: x & J2 x = x, and J2 x = 0 whenever x = y & -y for some y.
/// Every surviving complete table is checked against the full catalog.
/// With literal_k9_sweep the pointwise pruning is skipped and the whole
/// K9-pruned space is enumerated (used as its own oracle on small inputs).
std::vector<std::vector<int>> enumerate_j2_tables(const FiniteAlgebra& a, AxiomSetName catalog,
                                                  bool literal_k9_sweep = false);

/// Number of candidate tables the literal K9-pruned sweep would visit.
long long k9_search_space(const FiniteAlgebra& a);

/// All J2 tables making a satisfy the K axioms, as expanded algebras.
std::vector<FiniteAlgebra> forbidden_search(const FiniteAlgebra& a, bool literal_k9_sweep = false);

/// The congruence {(b,c) : g|b = g|c and g|-b = g|-c} for a bottom-fibre
/// element g of a K-member. Compatibility with J2 is verified, not assumed.
Partition theta_a(const FiniteAlgebra& a, int g);

/// Blocks = fibres of the reduct's decomposition; verified to be a
/// congruence of the full signature.
Partition fibre_congruence(const FiniteAlgebra& a);

// ============================================================================
// HS / ISP membership
// ============================================================================

enum class HsClass { trivial, b2, sl2, wke, none };
std::string hs_class_name(HsClass c);

/// Isomorphism test against the four algebras in HS of the three-valued
/// generator: the trivial algebra, the two-element Boolean algebra and
/// semilattice (with their forced J2 tables), and the generator itself.
HsClass hs_wke_classify(const FiniteAlgebra& a);

struct IspResult {
    bool basis_pass = false;   // BCA quasi-equational basis verdict
    bool embeds = false;       // separating homomorphisms into the generator
    int power = 0;             // exponent of the power embedded into
    std::vector<std::vector<int>> separating_maps;
    bool agree() const { return basis_pass == embeds; }
    bool member() const { return basis_pass && embeds; }
};

/// Two independent verdicts of membership in the quasivariety generated by
/// the three-valued algebra: the quasi-equational basis, and the existence
/// of an embedding into a finite power (equivalently, of a point-separating
/// family of homomorphisms into the generator). Disagreement is a defect
/// the caller must surface, not reconcile.
IspResult isp_wke_check(const FiniteAlgebra& a, int size_bound = 16);

// ============================================================================
// Open/dense decomposition of the BA v SL join
// ============================================================================

/// Elements fixed by J2 (the bottom fibre). Requires a K-member; the set is
/// cross-checked against the image of J2.
std::vector<int> open_elements(const FiniteAlgebra& a);
/// Elements sent to 0 by J2 (the fibre bottoms); cross-checked against the
/// image of x & -x.
std::vector<int> dense_elements(const FiniteAlgebra& a);

struct ODDecomposition {
    FiniteAlgebra algebra;
    FiniteAlgebra open_part;   // Boolean subalgebra on the open elements
    FiniteAlgebra dense_part;  // semilattice on the dense elements
    FiniteAlgebra product;
    Homomorphism embedding;    // a |-> (J2 a, a & -a)
    bool onto = false;
};

/// For a member of V (K plus J2 -x = -J2 x): builds the open Boolean part
/// and the dense semilattice part, verifies the dense part is isomorphic to
/// the quotient by a&-a = b&-b, and embeds the algebra into their product.
ODDecomposition od_embedding(const FiniteAlgebra& a);

struct IndependenceResult {
    bool boolean_side = false;  // true: BA_rel member, term must return x
    bool holds = false;
    std::optional<Valuation> counterexample;
};

/// Evaluates the independence witness J2 x | (J2 x & y) on a member of one
/// of the two relative subvarieties: it must equal x on the Boolean side
/// and y on the semilattice side.
IndependenceResult independence_check(const FiniteAlgebra& a);

}  // namespace bochvar
