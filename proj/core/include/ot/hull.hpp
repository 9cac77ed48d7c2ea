#pragma once

// Skolem-hull and closure membership, structural validity of notations,
// psi-term attributes, and the collapsing substitution alpha[rho/S].

#include <cstdint>
#include <string>
#include <vector>

#include "ot/term.hpp"

namespace ot {

// gamma in H_a(beta): the hull generated from the initial segment
// {delta : delta < beta} by the term formers, where psi_pi^f(b) enters only
// for b < a with its components already inside (and its function's
// coefficients re-checked below the term itself).
bool in_hull(const Term& gamma, const Term& a, const Term& beta);

// gamma in C^alpha(X): closure of the listed terms (cut at alpha) under the
// formers, with collapses psi_sigma^f(b) admitted only for sigma > alpha.
bool in_closure(const Term& gamma, const Term& alpha,
                const std::vector<Term>& X);

struct ValidationIssue {
  Term where;
  std::string reason;
};

struct ValidationReport {
  bool ok = true;
  std::vector<ValidationIssue> issues;
};

// Structural + side-condition validity of a canonical term as an OT(Pi^1_1)
// notation.  Never throws; all failures are reported with the offending
// subterm.
ValidationReport validate_ot(const Term& t);

// Attributes of a collapse-related term.
//   m:          the finite function attached to a psi term (empty otherwise)
//   p0:         head collapse index of the subscript chain through S
//   lam:        Lambda(gamma), the least epsilon term mu with S < mu < L
//               admitting the chain's coefficients (phi(1, z+1) family)
//   bigO:       O(gamma): 1 for Om, L for S, o_mu(m) for chain psi terms
//   chain_to_s: whether the subscript chain reaches S
// Terms without the corresponding attribute get zero() placeholders.
struct PsiAttrs {
  FiniteFn m;
  Term p0;
  Term lam;
  Term bigO;
  bool chain_to_s = false;
};

// Requires: t is Om, S, or a psi term.
PsiAttrs attrs(const Term& t);

// p0 of a chain psi term (the index at the S-collapse head).
Term p0_of(const Term& t);

// alpha in M_rho = H_{p0(rho)}(rho).  Requires rho a chain psi term.
bool in_M(const Term& alpha, const Term& rho);

// alpha[rho/S]: identity below S; S goes to rho, L to reg(rho), and the
// formers commute.  Requires alpha in M_rho (DomainError otherwise) and rho
// a chain psi term below S.
Term collapse_to(const Term& alpha, const Term& rho);

}  // namespace ot
