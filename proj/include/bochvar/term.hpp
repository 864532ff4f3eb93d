#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bochvar/algebra.hpp"

namespace bochvar {

// ============================================================================
// Term language
//
// Grammar (bit-exact external interface):
//   term     := or
//   or       := and ( '|' and )*                 left-associative
//   and      := unary ( '&' unary )*             left-associative
//   unary    := ('-' | 'J0' | 'J1' | 'J2') unary | primary
//   primary  := variable | '0' | '1' | '(' term ')'
//   variable := [a-z][a-z0-9]*
//
// J0 and J1 are derived connectives: before evaluation, J0 t rewrites to
// J2 -t and J1 t rewrites to -(J2 t | J2 -t).
// ============================================================================

enum class TermKind { Var, Zero, One, Not, J0, J1, J2, And, Or };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
    TermKind kind;
    std::string var;     // Var only
    TermPtr left, right; // unary ops use left only

    static TermPtr variable(std::string name);
    static TermPtr constant(bool one);
    static TermPtr make(TermKind k, TermPtr a, TermPtr b = nullptr);
};

bool term_equal(const TermPtr& a, const TermPtr& b);

/// Parses the grammar above. Throws bochvar::error with a 0-based character
/// position on syntax errors.
TermPtr parse_term(const std::string& text);

/// Minimal-parenthesis rendering; parse(term_to_string(t)) == t.
std::string term_to_string(const TermPtr& t);

/// Rewrites every J0/J1 node into its J2/not definition.
TermPtr desugar(const TermPtr& t);

/// Variables of t, sorted by name.
std::vector<std::string> term_variables(const TermPtr& t);

using Valuation = std::map<std::string, std::string>;

/// Structural table evaluation of t in a under v (J0/J1 via their
/// definitions). Throws if a variable is missing from v or if a J-connective
/// is applied over a J2-free algebra.
int evaluate(const TermPtr& t, const FiniteAlgebra& a, const Valuation& v);

// ============================================================================
// Identities and quasi-identities
// ============================================================================

struct Identity {
    TermPtr lhs, rhs;
};

struct QuasiIdentity {
    std::vector<Identity> premises;  // empty list = plain identity
    Identity conclusion;
};

/// "s = t"
Identity parse_identity(const std::string& text);
/// "s1 = t1 , s2 = t2 => s = t"; without "=>" parses as a plain identity.
QuasiIdentity parse_quasi_identity(const std::string& text);

std::string identity_to_string(const Identity& id);
std::string quasi_identity_to_string(const QuasiIdentity& q);

struct CheckResult {
    bool holds = false;
    std::optional<Valuation> counterexample;
};

/// Exhaustive check over all |A|^k valuations. Valuations are enumerated
/// with the variables sorted by name, each running through the carrier in
/// element order, last variable fastest; the first violation is returned.
CheckResult check_identity(const FiniteAlgebra& a, const Identity& id);

/// A valuation is a counterexample when every premise holds and the
/// conclusion fails. Same enumeration order as check_identity.
CheckResult check_quasi_identity(const FiniteAlgebra& a, const QuasiIdentity& q);

/// True iff every valuation of t into the given matrix algebra lands in the
/// designated set (element indices). Returns the first escaping valuation.
CheckResult tautology(const TermPtr& t, const FiniteAlgebra& matrix,
                      const std::vector<int>& designated);

std::string valuation_to_string(const Valuation& v);

}  // namespace bochvar
