#pragma once

// Total order on canonical terms, the auxiliary relations on finite
// functions (irreducibility, the pointwise bound f <^c xi, the lexicographic
// comparison f <^b_lx g), and the ordinal measures a(.), o(.), o_mu(.).
//
// compare() is exact: Equal is returned only for structurally identical
// terms.  For psi-vs-psi pairs both directions of the six-case criterion are
// evaluated; if they agree (both derivable or neither) the comparison is
// inconsistent for that pair and ComparatorDiagnostic is thrown rather than
// an arbitrary answer returned.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "ot/term.hpp"

namespace ot {

enum class Cmp : std::int8_t { Less = -1, Equal = 0, Greater = 1 };

const char* cmp_name(Cmp c);

// Raised when the psi comparison cases are not exhaustive/exclusive for a
// pair, or when the comparator recursion exceeds its depth guard.  Either
// indicates a term outside the validated fragment (or a seeded mutation).
struct ComparatorDiagnostic : std::runtime_error {
  explicit ComparatorDiagnostic(const std::string& what)
      : std::runtime_error(what) {}
};

Cmp compare(const Term& x, const Term& y);
bool lt(const Term& x, const Term& y);
bool leq(const Term& x, const Term& y);
Term max_term(const Term& x, const Term& y);

// f <^c xi: every key of f at or above c is bounded through the segment
// structure of xi (Def of the pointwise domination used by step-downs).
bool lt_under(const FiniteFn& f, const Term& c, const Term& xi);

// Irreducibility of a finite function: repeatedly folding the top pair of
// support points never violates the tail condition.
bool is_irreducible(const FiniteFn& f);

// f <^b_lx g: lexicographic comparison of finite functions from base b.
bool lt_lex(const FiniteFn& f, const FiniteFn& g, const Term& b);

// Measures.  a(.) forgets coefficients and caps each tower argument by a
// factor omega; o(.) folds the support gaps of f into a single tower term;
// o_mu(.) is o(.) computed over the epsilon base mu instead of L.
// Domain: arguments of a_measure and values of f must have L-normal forms.
Term a_measure(const Term& xi);
Term o_measure(const FiniteFn& f);
// Requires: mu an epsilon term with S < mu < L and SC_L(f) < mu.
Term o_measure_mu(const FiniteFn& f, const Term& mu);

// ---- Seeded comparator mutations (selftest sanity hooks) --------------------
//
// Each mutation injects one specific, documented bug into the comparison
// stack so the test suite can demonstrate it notices.  Production default is
// None.
enum class ComparatorMutation : int {
  None = 0,
  // psi six-case clause 2 accepts without its hull side condition.
  PsiCase2SkipHull = 1,
  // lt_lex ignores clause (b) (greater-at-first-difference) entirely.
  LtLexDropCaseB = 2,
  // theta-vs-theta with equal bases and unequal iterates inverts its answer.
  ThetaIterInverted = 3,
};

void set_comparator_mutation(ComparatorMutation m);
ComparatorMutation comparator_mutation();

}  // namespace ot
