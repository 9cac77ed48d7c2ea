#pragma once

// L-normal forms: every nonzero value in the finite-function sublanguage
// decomposes uniquely as a weakly descending sum of tower monomials
// th_b(xi) * a over a fixed epsilon base (L by default), with a trailing
// small part viewed as th_1(0) * t.  This header exposes the decomposition,
// head/tail/segment accessors, and the partial inverse th_{-c}.

#include <vector>

#include "ot/term.hpp"

namespace ot {

struct LnfPart {
  Term iter;   // single omega-power b
  Term arg;    // xi
  Term coeff;  // a > 0
};

struct Lnf {
  Term base;                   // L or an epsilon term mu
  std::vector<LnfPart> parts;  // strictly descending by monomial value; empty = 0
};

// Decomposes xi over the base carried by its theta parts (default L when xi
// has none).  Throws DomainError when xi has no L-normal form over a single
// base (e.g. kept-exotic phi terms at or above L, or mixed bases).
Lnf lnf_decompose(const Term& xi);
Term lnf_assemble(const Lnf& view);

// Largest / smallest monomial of the decomposition, coefficient stripped:
// hd(xi) and tl(xi).  Requires xi != 0.
Term lnf_head(const Term& xi);
Term lnf_tail(const Term& xi);

// All segments of xi in increasing order: 0, the head monomial (with its
// coefficient), head plus next, ..., xi itself.
std::vector<Term> segments(const Term& xi);

// th_{-c}(zeta) for zeta = th_b(xi) (coefficient 1): peels c iterations off
// the tower, descending into hd(xi) when c exceeds b.  Requires zeta to be a
// single coefficient-free tower monomial (or zeta = 0, which yields 0 only
// for c = 0).
Term theta_minus(const Term& c, const Term& zeta);

// SC_L: the coefficients of xi collected through nested normal forms.  For
// xi = sum of th_{b_i}(xi_i) * a_i this is the union of {a_i} (kept whole)
// with SC_L(xi_i); iterate indices b_i are not collected.
std::vector<Term> sc_lambda(const Term& xi);
// Union over all keys c: {c} and SC_L(f(c)).
std::vector<Term> sc_lambda(const FiniteFn& f);
// max of SC_L with max(empty) = 0.
Term max_sc_lambda(const Term& xi);
Term max_sc_lambda(const FiniteFn& f);

}  // namespace ot
