#include <utility>

#include "ot/finite_fn.hpp"
#include "ot/hull.hpp"
#include "ot/lnf.hpp"
#include "ot/order.hpp"

namespace ot {

namespace {

void fail(ValidationReport& rep, const Term& where, std::string reason) {
  rep.ok = false;
  rep.issues.push_back({where, std::move(reason)});
}

Term omega() { return phi(zero(), one()); }

void check(const Term& t, ValidationReport& rep);

void check_theta(const Term& t, ValidationReport& rep) {
  const Term& iter = t.theta_iter();
  const Term& base = t.theta_base();
  const Term& coeff = t.theta_coeff();
  if (!is_principal(iter) || compare(iter, lam()) != Cmp::Less)
    fail(rep, t, "tower iterate must be a single omega-power below L");
  bool base_ok = base.kind() == Kind::Lam || base.kind() == Kind::Reg ||
                 (base.kind() == Kind::Phi && is_epsilon_term(base));
  if (!base_ok)
    fail(rep, t, "tower base must be L, reg(.), or an epsilon phi term");
  if (coeff.kind() == Kind::Zero || compare(coeff, base) != Cmp::Less)
    fail(rep, t, "tower coefficient must be nonzero and below the base");
  // Normality: the tower strictly dominates its argument.
  Term stripped = theta(iter, t.theta_arg(), one(), base);
  if (compare(stripped, t.theta_arg()) != Cmp::Greater)
    fail(rep, t, "tower must strictly dominate its argument");
  check(iter, rep);
  check(t.theta_arg(), rep);
  check(coeff, rep);
  check(base, rep);
}

// Is some step-down point (d, c) admissible for g against the subscript's
// function fpi?  c runs over supp(fpi); d over the candidate cut points
// below c (0 and the support points of either function), which suffices: a
// valid off-support cut can always be moved down to the nearest one.
bool step_down_ok(const FiniteFn& g, const FiniteFn& fpi) {
  auto gap_free = [](const FiniteFn& h, const Term& lo, const Term& hi) {
    for (const auto& e : h.entries())
      if (compare(e.first, lo) == Cmp::Greater &&
          compare(e.first, hi) == Cmp::Less)
        return false;
    return true;
  };
  std::vector<Term> cuts;
  cuts.push_back(zero());
  for (const auto& e : fpi.entries()) cuts.push_back(e.first);
  for (const auto& e : g.entries()) cuts.push_back(e.first);

  for (const auto& ce : fpi.entries()) {
    const Term& c = ce.first;
    for (const Term& d : cuts) {
      if (compare(d, c) != Cmp::Less) continue;
      if (!gap_free(fpi, d, c) || !gap_free(g, d, c)) continue;
      if (fn_below(g, d) != fn_below(fpi, d)) continue;
      // g(d) < fpi(d) + th_{c-d}(fpi(c)) * omega
      Term bound =
          add(fpi.value(d), theta(sub_left(c, d), fpi.value(c), omega(), lam()));
      if (compare(g.value(d), bound) != Cmp::Less) continue;
      if (!lt_under(g, c, fpi.value(c))) continue;
      return true;
    }
  }
  return false;
}

void check_psi(const Term& t, ValidationReport& rep) {
  const Term& sub = t.psi_sub();
  const Term& idx = t.psi_idx();
  const FiniteFn& fn = t.psi_fn();

  check(sub, rep);
  check(idx, rep);
  for (const auto& e : fn.entries()) {
    check(e.first, rep);
    check(e.second, rep);
    if (compare(e.first, lam()) != Cmp::Less)
      fail(rep, t, "function keys must lie below L");
    if (!value_coeff_ok(e.second))
      fail(rep, t, "function value breaks the coefficient discipline");
  }

  switch (sub.kind()) {
    case Kind::Om:
    case Kind::Lam:
    case Kind::Reg: {
      if (!fn.empty())
        fail(rep, t, "collapse below a plain regular takes no function");
      if (!in_hull(idx, idx, t))
        fail(rep, t, "collapse index must build from below the term");
      return;
    }
    case Kind::S: {
      if (fn.size() != 1) {
        fail(rep, t, "collapse below S needs exactly one function entry");
        return;
      }
      const Term& c = fn.entries().front().first;
      const Term& xi = fn.entries().front().second;
      if (!in_hull(idx, idx, t) || !in_hull(c, idx, t) || !in_hull(xi, idx, t))
        fail(rep, t, "collapse components must build from below the term");
      if (compare(max_sc_lambda(fn), max_sc_lambda(idx)) == Cmp::Greater)
        fail(rep, t, "function coefficients must not exceed those of the index");
      return;
    }
    case Kind::Psi: {
      if (!chain_to_S(sub)) {
        fail(rep, t, "collapse subscript must be regular");
        return;
      }
      const FiniteFn& fpi = sub.psi_fn();
      if (!is_irreducible(fn))
        fail(rep, t, "step-down function must be irreducible");
      if (!step_down_ok(fn, fpi))
        fail(rep, t, "no admissible step-down point against the subscript");
      if (compare(max_sc_lambda(fn),
                  least_eps_above(max_sc_lambda(fpi))) != Cmp::Less)
        fail(rep, t, "step-down coefficients escape the subscript's epsilon bound");
      if (!in_hull(sub, idx, t) || !in_hull(idx, idx, t))
        fail(rep, t, "collapse components must build from below the term");
      for (const Term& s : sc_lambda(fn)) {
        if (!in_hull(s, idx, t))
          fail(rep, t, "step-down coefficients must build from below the term");
      }
      // Coefficients must additionally live in the M-class of the term.
      Term p0;
      try {
        p0 = p0_of(t);
      } catch (const DomainError&) {
        fail(rep, t, "subscript chain has no head index");
        return;
      }
      for (const Term& s : sc_lambda(fn))
        if (!in_hull(s, p0, t))
          fail(rep, t, "step-down coefficients escape the term's M-class");
      return;
    }
    default:
      fail(rep, t, "collapse subscript must be regular");
      return;
  }
}

void check(const Term& t, ValidationReport& rep) {
  switch (t.kind()) {
    case Kind::Zero:
    case Kind::Om:
    case Kind::S:
    case Kind::Lam:
      return;
    case Kind::Nat:
      if (t.nat_value() == 0) fail(rep, t, "numeral with value 0");
      return;
    case Kind::Reg: {
      const Term& x = t.reg_arg();
      if (compare(x, stable()) != Cmp::Less)
        fail(rep, t, "reg argument must lie below S");
      else if (x.kind() != Kind::Om && !is_regular_term(x))
        fail(rep, t, "reg argument must be a regular term");
      check(x, rep);
      return;
    }
    case Kind::Sum: {
      const auto& parts = t.sum_parts();
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].kind() == Kind::Nat && i + 1 != parts.size())
          fail(rep, t, "numeral part before the end of a sum");
        if (i + 1 < parts.size() &&
            compare(mono_base(parts[i]), mono_base(parts[i + 1])) == Cmp::Less)
          fail(rep, t, "sum parts out of order");
        check(parts[i], rep);
      }
      return;
    }
    case Kind::Phi:
      check(t.phi_a(), rep);
      check(t.phi_b(), rep);
      return;
    case Kind::Theta:
      check_theta(t, rep);
      return;
    case Kind::Psi:
      check_psi(t, rep);
      return;
  }
}

}  // namespace

ValidationReport validate_ot(const Term& t) {
  ValidationReport rep;
  try {
    check(t, rep);
  } catch (const DomainError& e) {
    fail(rep, t, std::string("domain error during validation: ") + e.what());
  } catch (const ComparatorDiagnostic& e) {
    fail(rep, t, std::string("comparator diagnostic during validation: ") + e.what());
  }
  return rep;
}

Term p0_of(const Term& t) {
  if (t.kind() != Kind::Psi || !chain_to_S(t))
    throw DomainError("p0_of: needs a psi term whose chain reaches S");
  if (t.psi_sub().kind() == Kind::S) return t.psi_idx();
  return p0_of(t.psi_sub());
}

PsiAttrs attrs(const Term& t) {
  PsiAttrs r;
  r.p0 = zero();
  r.lam = zero();
  r.bigO = zero();
  switch (t.kind()) {
    case Kind::Om:
      r.bigO = one();
      return r;
    case Kind::S:
      r.bigO = lam();
      return r;
    case Kind::Psi:
      break;
    default:
      throw DomainError("attrs: needs Om, S, or a psi term");
  }
  r.m = t.psi_fn();
  if (!chain_to_S(t)) return r;
  r.chain_to_s = true;
  r.p0 = p0_of(t);
  r.lam = least_eps_above(max_term(stable(), max_sc_lambda(r.p0)));
  r.bigO = o_measure_mu(r.m, r.lam);
  return r;
}

bool in_M(const Term& alpha, const Term& rho) {
  if (rho.kind() != Kind::Psi || !chain_to_S(rho))
    throw DomainError("in_M: rho must be a chain psi term");
  return in_hull(alpha, p0_of(rho), rho);
}

}  // namespace ot
