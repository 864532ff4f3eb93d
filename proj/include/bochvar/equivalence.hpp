#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bochvar/boolean.hpp"
#include "bochvar/plonka.hpp"

namespace bochvar {

// ============================================================================
// Bochvar systems and the equivalence with Bochvar algebras
//
// A Bochvar system is a Boolean algebra B together with a meet-subsemilattice
// I of B containing 1. The system encodes a J2-algebra: the fibre at i in I
// is the quotient B/[i) over the principal filter at i, indices are ordered
// dually to the Boolean order, fibre maps are the further quotients, and J2
// sends each fibre element to its unique preimage below the fibre's
// generator in the bottom fibre.
// ============================================================================

struct BochvarSystem {
    BooleanAlgebra boolean;
    std::vector<int> subsemilattice;  // masks, ascending, must contain full()
};

/// One line per violated invariant (1 in I, meet closure); empty when valid.
std::vector<std::string> validate_bochvar_system(const BochvarSystem& s);

BochvarSystem make_bochvar_system(const BooleanAlgebra& b,
                                  const std::vector<std::string>& member_names);

std::string bochvar_system_to_string(const BochvarSystem& s);

/// A constructed algebra keeps its bookkeeping: which global element realises
/// the class of a given Boolean element in a given fibre.
struct SystemAlgebra {
    BochvarSystem system;
    FiniteAlgebra algebra;  // with J2
    Decomposition decomposition;  // of the reduct
    /// order in which subsemilattice members became fibres (bottom first)
    std::vector<int> fibre_masks;
    /// element_at[f][b] = global index of (the class of Boolean element b) in fibre f
    std::vector<std::vector<int>> element_at;

    int fibre_of_mask(int mask) const;
    /// global element representing b/[i)
    int locate(int index_mask, int boolean_element) const;
};

/// Builds the algebra of a system. The result satisfies the BCA basis; the
/// J2 preimages are found by exhaustive search with a uniqueness assertion.
SystemAlgebra system_to_algebra(const BochvarSystem& s);

/// The inverse construction for an algebra passing the BCA basis: the
/// Boolean part is the bottom fibre of the reduct's decomposition
/// (re-atomised canonically) and the subsemilattice collects J2 of each
/// fibre's top. Keeps the correspondence needed by the functor actions.
struct AlgebraSystem {
    BochvarSystem system;
    Decomposition decomposition;
    BooleanConversion bottom;          // bottom fibre -> canonical Boolean algebra
    std::vector<int> global_of_mask;   // mask -> element of the source algebra
    std::vector<int> generator_of_fibre;  // fibre -> mask of J2(fibre top)
};

AlgebraSystem algebra_to_system(const FiniteAlgebra& a);

// ============================================================================
// Round trips
// ============================================================================

/// Isomorphism between a and the algebra rebuilt from its system, found by
/// search. Also returned: the rebuilt algebra for reporting.
struct AlgebraRoundTrip {
    SystemAlgebra rebuilt;
    std::optional<Homomorphism> iso;
};
AlgebraRoundTrip roundtrip_algebra(const FiniteAlgebra& a);

/// The canonical map a |-> (class of J2 a in a's fibre), verified to be an
/// isomorphism rather than searched. Used by the naturality checks.
Homomorphism canonical_roundtrip_iso(const FiniteAlgebra& a, const AlgebraSystem& gamma,
                                     const SystemAlgebra& rebuilt);

/// Boolean isomorphism carrying the subsemilattice onto the recovered one.
struct SystemRoundTrip {
    BochvarSystem recovered;
    std::optional<Homomorphism> iso;  // between the Boolean views
};
SystemRoundTrip roundtrip_system(const BochvarSystem& s);

// ============================================================================
// Morphisms and the functor actions
// ============================================================================

/// A Boolean homomorphism between the underlying algebras mapping the source
/// subsemilattice into the target one.
struct SystemMorphism {
    BochvarSystem source;
    BochvarSystem target;
    std::vector<int> map;  // source mask -> target mask

    std::optional<std::string> check() const;
};

std::vector<SystemMorphism> enumerate_system_morphisms(const BochvarSystem& s1,
                                                       const BochvarSystem& s2);

/// Restriction of a J2-algebra homomorphism to the bottom fibres, expressed
/// on the canonical Boolean parts of both systems. Verifies that the image
/// stays in the bottom fibre and that generators land in the target
/// subsemilattice.
SystemMorphism gamma_morphism(const Homomorphism& f, const AlgebraSystem& source_system,
                              const AlgebraSystem& target_system);

/// The induced map between constructed algebras: the class of a at fibre i
/// goes to the class of g(a) at fibre g(i). Verified exhaustively.
Homomorphism xi_morphism(const SystemMorphism& g, const SystemAlgebra& source_algebra,
                         const SystemAlgebra& target_algebra);

}  // namespace bochvar
