#pragma once

#include <string>
#include <vector>

#include "bochvar/algebra.hpp"

namespace bochvar {

// ============================================================================
// The bounded test universe: every algebra built from a Bochvar system over
// at most max_atoms atoms, every semilattice with zero up to size four
// (chains and the diamond), their pairwise direct products up to
// max_product_size elements, and the 1-/2-generated subalgebras and all
// quotients up to max_derived_size, deduplicated up to isomorphism. All
// members carry J2 and land in the variety K by construction.
// ============================================================================

struct CorpusEntry {
    std::string label;
    FiniteAlgebra algebra;
};

struct CorpusOptions {
    int max_atoms = 3;
    int max_semilattice = 4;
    int max_product_size = 16;
    int max_derived_size = 12;
    bool derived = true;
};

std::vector<CorpusEntry> build_corpus(const CorpusOptions& options = {});

}  // namespace bochvar
