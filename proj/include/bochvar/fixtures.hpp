#pragma once

#include "bochvar/algebra.hpp"
#include "bochvar/boolean.hpp"
#include "bochvar/plonka.hpp"

namespace bochvar {
namespace fixtures {

// Canonical small algebras. The three-valued tables follow the weak Kleene
// scheme: the middle value (spelled "half" in files and reports) is
// infectious for and/or, fixed by not, and sent to 0 by J2.

/// Three-element algebra on {0, half, 1} with J2.
const FiniteAlgebra& wke();
/// Its J2-free reduct.
const FiniteAlgebra& wk();

/// Two-element Boolean algebra {0,1}, no J2.
const FiniteAlgebra& b2();
/// Same with J2 = identity.
const FiniteAlgebra& b2e();

/// Two-element semilattice with zero {0,e} (join = meet, not = id, 0 = 1).
const FiniteAlgebra& sl2();
/// Same with J2 constant 0.
const FiniteAlgebra& sl2e();

/// One-element algebra, with and without J2.
const FiniteAlgebra& trivial();
const FiniteAlgebra& trivial_reduct();

/// Powerset fixtures: atoms p / p,q / p,q,r.
const BooleanAlgebra& bool2();
const BooleanAlgebra& bool4();
const BooleanAlgebra& bool8();

/// Chain semilattice with zero on n elements (s0 < s1 < ... ), J2 constant.
FiniteAlgebra sl_chain(int n);
/// Four-element diamond semilattice {0, a, b, t}, J2 constant.
FiniteAlgebra sl_diamond();

/// The two-fibre system whose sum is wk(): a two-element Boolean bottom
/// fibre and a trivial top fibre, glued by the collapse homomorphism.
SemilatticeDirectSystem wk_system();

/// The seven-element forbidden configuration: three two-element Boolean
/// fibres over the bottom and both incomparable middle indices, and a
/// trivial fibre at their join. Its sum is an SIBSL with surjective
/// homomorphisms that admits no K-compatible J2 table.
SemilatticeDirectSystem forb_system();
/// plonka_sum(forb_system()).algebra
const FiniteAlgebra& forb();

}  // namespace fixtures
}  // namespace bochvar
