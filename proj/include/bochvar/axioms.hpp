#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bochvar/term.hpp"

namespace bochvar {

// ============================================================================
// Axiom catalogs
//
//   FG     Finn-Grigolia quasi-equational basis for Bochvar algebras
//          (18 identity schemata expanded to 42 instances + 1 quasi-identity)
//   BCA    the simplified quasi-equational basis (12 identities + 1 quasi)
//   IBSL   involutive bisemilattices, I1-I8
//   SIBSL  IBSL + the at-most-one-fixpoint quasi-identity
//   K      the 12-identity equational basis of the variety generated by BCA
//   V      K + J2 -x = -J2 x        (the join of BA and SL)
//   BA_rel K + J2 x = x             (Boolean algebras, relative basis)
//   SL_rel K + J2 x = 1             (semilattices with zero, relative basis)
//
// Schema expansion labels are stable: k-indexed schemata get ".k0/.k1/.k2"
// suffixes, the FG.13 triples ".i0j1k2" style (all 6 ordered triples of
// pairwise distinct i,j,k), the FG.15 pairs ".i0k0" style (all 9 pairs,
// including i=k, whose instances are trivially valid).
// ============================================================================

enum class AxiomSetName { FG, BCA, IBSL, SIBSL, K, V, BA_rel, SL_rel };

struct AxiomItem {
    std::string label;
    QuasiIdentity body;
};

struct AxiomSet {
    AxiomSetName name;
    std::vector<AxiomItem> items;
};

const AxiomSet& axiom_set(AxiomSetName name);
/// Accepts the catalog names above plus the aliases "BA" and "SL".
AxiomSetName axiom_set_by_name(const std::string& name);
std::string axiom_set_name(AxiomSetName name);

// ============================================================================
// Checking
// ============================================================================

struct ItemVerdict {
    std::string label;
    bool holds = false;
    std::optional<Valuation> counterexample;
};

struct AxiomReport {
    AxiomSetName set;
    std::vector<ItemVerdict> verdicts;
    bool all_hold = true;

    const ItemVerdict* first_failure() const;
};

/// One verdict per labeled item, exhaustively checked. Requires a J2 table
/// whenever the catalog mentions a J-connective.
AxiomReport check_axiom_set(const FiniteAlgebra& a, AxiomSetName set);
bool passes(const FiniteAlgebra& a, AxiomSetName set);

/// "LABEL: HOLDS" / "LABEL: FAILS at x=...,y=..." lines.
std::string render_report(const AxiomReport& report);

// ============================================================================
// Classification
// ============================================================================

struct Classification {
    bool has_j2 = false;
    // catalog verdicts; J2 catalogs are absent for J2-free input
    std::vector<std::pair<std::string, bool>> memberships;
    int fixpoint_count = 0;
    int fibre_count = 0;  // 0 when the reduct is not an involutive bisemilattice
    bool ibsl = false;
    bool k_member = false;
    // Derived consequences that must hold whenever K does:
    //   (1) x | J2 x = x          (2) x = J2 x | (x & -x)
    //   (3) J2 J2 x = J2 x        (4) x | -J2 y = x | -J2 (x | y)
    std::vector<ItemVerdict> k_consequences;
};

Classification classify(const FiniteAlgebra& a);
std::string render_classification(const Classification& c);

}  // namespace bochvar
