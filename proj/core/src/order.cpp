#include "ot/order.hpp"

#include <vector>

#include "ot/finite_fn.hpp"
#include "ot/hull.hpp"
#include "ot/lnf.hpp"
#include "ot/textio.hpp"

namespace ot {

const char* cmp_name(Cmp c) {
  switch (c) {
    case Cmp::Less: return "Less";
    case Cmp::Equal: return "Equal";
    case Cmp::Greater: return "Greater";
  }
  return "?";
}

namespace {

thread_local int g_depth = 0;
constexpr int kMaxDepth = 10000;

struct DepthGuard {
  DepthGuard() {
    if (++g_depth > kMaxDepth) {
      --g_depth;
      throw ComparatorDiagnostic("comparison recursion exceeded the depth guard");
    }
  }
  ~DepthGuard() { --g_depth; }
};

ComparatorMutation g_mutation = ComparatorMutation::None;

Cmp rev(Cmp c) {
  if (c == Cmp::Less) return Cmp::Greater;
  if (c == Cmp::Greater) return Cmp::Less;
  return Cmp::Equal;
}

bool is_one(const Term& t) {
  return t.kind() == Kind::Nat && t.nat_value() == 1;
}

// log_omega of an additively principal term (duplicated shape of the
// term.cpp helper, but local: only the cases reachable from monomial bases).
Term plog(const Term& p) {
  switch (p.kind()) {
    case Kind::Nat:
      return zero();
    case Kind::Phi:
      return p.phi_a().kind() == Kind::Zero ? p.phi_b() : p;
    case Kind::Theta: {
      if (p.theta_iter().kind() != Kind::Nat) return p;
      Term base_log = mul(p.theta_base(), p.theta_arg());
      if (is_one(p.theta_coeff())) return base_log;
      return add(base_log, plog(p.theta_coeff()));
    }
    default:
      return p;  // Om, S, Lam, Reg, Psi: epsilon values
  }
}

// ---- Sums: run-grouped lexicographic ----------------------------------------

struct Run {
  Term base;
  Term coeff;
};

std::vector<Run> monomial_runs(const Term& t) {
  std::vector<Run> runs;
  for (const Term& part : parts_of(t)) {
    Term b = mono_base(part);
    Term c = mono_coeff(part);
    if (!runs.empty() && structural_eq(runs.back().base, b))
      runs.back().coeff = add(runs.back().coeff, c);
    else
      runs.push_back({std::move(b), std::move(c)});
  }
  return runs;
}

Cmp cmp_sums(const Term& x, const Term& y) {
  std::vector<Run> rx = monomial_runs(x);
  std::vector<Run> ry = monomial_runs(y);
  std::size_t n = std::min(rx.size(), ry.size());
  for (std::size_t i = 0; i < n; ++i) {
    Cmp cb = compare(rx[i].base, ry[i].base);
    if (cb != Cmp::Equal) return cb;
    Cmp cc = compare(rx[i].coeff, ry[i].coeff);
    if (cc != Cmp::Equal) return cc;
  }
  if (rx.size() == ry.size()) return Cmp::Equal;
  return rx.size() < ry.size() ? Cmp::Less : Cmp::Greater;
}

// ---- Principal pairs --------------------------------------------------------

// omega^b vs the theta monomial T*c (T coefficient-stripped), both over the
// same value scale; decided through the omega-exponents.
Cmp cmp_omega_pow_vs_theta(const Term& b, const Term& T, const Term& c) {
  Term L = plog(T);
  if (is_one(c)) {
    Cmp d = compare(b, L);
    // Equal would mean a second spelling of the same value; the phi node
    // sorts below the tower spelling by convention (not canonically reachable).
    return d == Cmp::Greater ? Cmp::Greater : Cmp::Less;
  }
  if (c.kind() == Kind::Nat) {
    // T*c with finite c >= 2: between T and T*omega
    Cmp d = compare(b, L);
    if (d == Cmp::Less) return Cmp::Less;
    if (d == Cmp::Equal) return Cmp::Less;  // omega^b = T < T*c
    return Cmp::Greater;                    // omega^b >= T*omega > T*c
  }
  // transfinite coefficient: T*c has head exponent L + log(head(c))
  Term ch = parts_of(c).front();
  Term g = plog(mono_base(ch));
  Cmp d = compare(b, add(L, g));
  if (d == Cmp::Greater) return Cmp::Greater;
  if (d == Cmp::Less) return Cmp::Less;
  // equal head exponents: a bare omega-power is <= the monomial, strict
  // unless the monomial is exactly that power (not canonically reachable)
  return Cmp::Less;
}

Cmp cmp_phi_theta(const Term& x, const Term& y) {
  const Term& B = y.theta_base();
  if (compare(x, B) != Cmp::Greater) return Cmp::Less;  // x <= B < y
  const Term& a = x.phi_a();
  if (a.kind() == Kind::Zero)
    return cmp_omega_pow_vs_theta(x.phi_b(), mono_base(y), y.theta_coeff());
  // epsilon-family phi above the base
  const Term& it = y.theta_iter();
  if (it.kind() == Kind::Nat)
    return Cmp::Greater;  // finite towers over B stay below the next epsilon
  // formal transfinite iterate: compare fixed-point levels, then indices
  Term e = plog(it);
  Cmp d = compare(a, e);
  if (d != Cmp::Equal) return d;
  Term idx = add(B, succ(y.theta_arg()));  // formal index B + 1 + arg
  Cmp d2 = compare(x.phi_b(), idx);
  if (d2 != Cmp::Equal) return d2;
  return Cmp::Less;  // equal formal index: phi spelling sorts first (documented)
}

Cmp cmp_theta_theta(const Term& x, const Term& y) {
  const Term& Bx = x.theta_base();
  const Term& By = y.theta_base();
  if (structural_eq(Bx, By)) {
    const Term& itx = x.theta_iter();
    const Term& ity = y.theta_iter();
    Cmp ci = compare(itx, ity);
    Cmp core;
    if (ci == Cmp::Equal) {
      core = compare(x.theta_arg(), y.theta_arg());
    } else if (ci == Cmp::Less) {
      // th_b(xi) < th_{b'}(eta) iff xi < th_{b'-b}(eta); with b < b' both
      // omega-powers, b' - b = b', so the bound is the stripped right side.
      Term stripped_y = theta(ity, y.theta_arg(), one(), By);
      core = compare(x.theta_arg(), stripped_y) == Cmp::Less ? Cmp::Less
                                                             : Cmp::Greater;
      if (g_mutation == ComparatorMutation::ThetaIterInverted) core = rev(core);
    } else {
      Term stripped_x = theta(itx, x.theta_arg(), one(), Bx);
      core = compare(y.theta_arg(), stripped_x) == Cmp::Less ? Cmp::Greater
                                                             : Cmp::Less;
      if (g_mutation == ComparatorMutation::ThetaIterInverted) core = rev(core);
    }
    if (core != Cmp::Equal) return core;
    return compare(x.theta_coeff(), y.theta_coeff());
  }
  Cmp cb = compare(Bx, By);
  if (cb == Cmp::Equal)
    throw ComparatorDiagnostic("distinct theta bases compared equal");
  if (cb == Cmp::Greater) return rev(cmp_theta_theta(y, x));
  // Bx < By.  Finite towers over the smaller base stay below it; formal
  // transfinite iterates are anchored at their phi level and re-compared.
  if (x.theta_iter().kind() == Kind::Nat) return Cmp::Less;
  Term anchor = phi(plog(x.theta_iter()), add(Bx, succ(x.theta_arg())));
  return cmp_phi_theta(anchor, y);
}

// ---- psi vs psi: the six-case criterion -------------------------------------

bool hull_all_sc(const FiniteFn& f, const Term& a, const Term& beta) {
  for (const Term& s : sc_lambda(f))
    if (!in_hull(s, a, beta)) return false;
  return true;
}

// Is P < Q derivable?  P = psi_pi^f(b), Q = psi_kappa^g(a).
bool psi_less(const Term& P, const Term& Q) {
  const Term& pi = P.psi_sub();
  const Term& b = P.psi_idx();
  const FiniteFn& f = P.psi_fn();
  const Term& kappa = Q.psi_sub();
  const Term& a = Q.psi_idx();
  const FiniteFn& g = Q.psi_fn();

  // (1) pi <= Q
  if (compare(pi, Q) != Cmp::Greater) return true;

  Cmp ab = compare(b, a);
  if (ab == Cmp::Less) {
    // (2) b < a, P < kappa, and {pi, b} u SC(f) inside the a-hull of Q
    if (compare(P, kappa) == Cmp::Less) {
      bool hull_ok = true;
      if (g_mutation != ComparatorMutation::PsiCase2SkipHull)
        hull_ok = in_hull(pi, a, Q) && in_hull(b, a, Q) && hull_all_sc(f, a, Q);
      if (hull_ok) return true;
    }
  } else if (ab == Cmp::Greater) {
    // (3) b > a and the components of Q escape the b-hull of P
    bool q_in = in_hull(kappa, b, P) && in_hull(a, b, P) && hull_all_sc(g, b, P);
    if (!q_in) return true;
  } else {
    Cmp sk = compare(kappa, pi);
    if (sk == Cmp::Less) {
      // (4) equal indices, kappa < pi, kappa escapes the hull of P
      if (!in_hull(kappa, b, P)) return true;
    } else if (sk == Cmp::Equal) {
      // (5) same subscript: SC(f) inside the hull of Q and f lex-below g
      if (hull_all_sc(f, a, Q) && lt_lex(f, g, zero())) return true;
      // (6) or SC(g) escapes the hull of P
      if (!hull_all_sc(g, b, P)) return true;
    }
  }
  return false;
}

Cmp cmp_psi_psi(const Term& x, const Term& y) {
  bool xy = psi_less(x, y);
  bool yx = psi_less(y, x);
  if (xy == yx)
    throw ComparatorDiagnostic(
        std::string("psi comparison cases are not decisive: ") +
        (xy ? "both" : "neither") + " direction derivable for " +
        print_term(x) + " vs " + print_term(y));
  return xy ? Cmp::Less : Cmp::Greater;
}

// x's kind strictly before y's kind in the dispatch order below.
int kind_rank(Kind k) {
  switch (k) {
    case Kind::Om: return 0;
    case Kind::S: return 1;
    case Kind::Lam: return 2;
    case Kind::Reg: return 3;
    case Kind::Phi: return 4;
    case Kind::Psi: return 5;
    case Kind::Theta: return 6;
    default: return 7;  // unreachable for principals
  }
}

Cmp cmp_principal(const Term& x, const Term& y) {
  Kind kx = x.kind();
  Kind ky = y.kind();
  if (kind_rank(kx) > kind_rank(ky)) return rev(cmp_principal(y, x));

  switch (kx) {
    case Kind::Om:
      switch (ky) {
        case Kind::S:
        case Kind::Lam:
        case Kind::Reg:
        case Kind::Theta:
          return Cmp::Less;
        case Kind::Phi:
          return lt(y.phi_a(), x) && lt(y.phi_b(), x) ? Cmp::Greater : Cmp::Less;
        case Kind::Psi:
          // psi below Om exactly when collapsing at Om itself
          return y.psi_sub().kind() == Kind::Om ? Cmp::Greater : Cmp::Less;
        default: break;
      }
      break;
    case Kind::S:
      switch (ky) {
        case Kind::Lam:
          return Cmp::Less;
        case Kind::Theta: {
          // L- and epsilon-based towers sit above S; towers over a collapsed
          // regular live inside the collapse, below S.
          Kind bk = y.theta_base().kind();
          return bk == Kind::Reg || bk == Kind::Om ? Cmp::Greater : Cmp::Less;
        }
        case Kind::Reg:
          return Cmp::Greater;  // canonical reg sits below S
        case Kind::Phi:
          return lt(y.phi_a(), x) && lt(y.phi_b(), x) ? Cmp::Greater : Cmp::Less;
        case Kind::Psi:
          // only the L-collapses land in the window (S, L)
          return y.psi_sub().kind() == Kind::Lam ? Cmp::Less : Cmp::Greater;
        default: break;
      }
      break;
    case Kind::Lam:
      switch (ky) {
        case Kind::Reg:
        case Kind::Psi:
          return Cmp::Greater;
        case Kind::Phi:
          return lt(y.phi_a(), x) && lt(y.phi_b(), x) ? Cmp::Greater : Cmp::Less;
        case Kind::Theta:
          return y.theta_base().kind() == Kind::Lam ? Cmp::Less : Cmp::Greater;
        default: break;
      }
      break;
    case Kind::Reg:
      switch (ky) {
        case Kind::Reg:
          return compare(x.reg_arg(), y.reg_arg());
        case Kind::Phi:
          return lt(y.phi_a(), x) && lt(y.phi_b(), x) ? Cmp::Greater : Cmp::Less;
        case Kind::Psi:
          if (compare(x, y.psi_sub()) != Cmp::Less) return Cmp::Greater;
          return lt(x.reg_arg(), y) ? Cmp::Less : Cmp::Greater;
        case Kind::Theta: {
          Kind bk = y.theta_base().kind();
          if (bk != Kind::Reg && bk != Kind::Om) return Cmp::Less;
          // A tower over a collapsed regular stays above its base but below
          // the next regular past it.
          return compare(x, y.theta_base()) == Cmp::Greater ? Cmp::Greater
                                                            : Cmp::Less;
        }
        default: break;
      }
      break;
    case Kind::Phi:
      switch (ky) {
        case Kind::Phi: {
          Cmp ca = compare(x.phi_a(), y.phi_a());
          if (ca == Cmp::Equal) return compare(x.phi_b(), y.phi_b());
          if (ca == Cmp::Less) {
            Cmp d = compare(x.phi_b(), y);
            if (d == Cmp::Equal)
              throw ComparatorDiagnostic("non-canonical phi fixed point");
            return d;
          }
          Cmp d = compare(x, y.phi_b());
          if (d == Cmp::Equal)
            throw ComparatorDiagnostic("non-canonical phi fixed point");
          return d;
        }
        case Kind::Psi:
          return lt(x.phi_a(), y) && lt(x.phi_b(), y) ? Cmp::Less : Cmp::Greater;
        case Kind::Theta:
          return cmp_phi_theta(x, y);
        default: break;
      }
      break;
    case Kind::Psi:
      switch (ky) {
        case Kind::Psi:
          return cmp_psi_psi(x, y);
        case Kind::Theta: {
          if (y.theta_base().kind() == Kind::Lam) return Cmp::Less;
          const Term& mu = y.theta_base();
          if (compare(x, mu) != Cmp::Greater) return Cmp::Less;
          // x strongly critical above mu: y < x iff all components are
          bool below = lt(y.theta_iter(), x) && lt(y.theta_arg(), x) &&
                       lt(y.theta_coeff(), x);
          return below ? Cmp::Greater : Cmp::Less;
        }
        default: break;
      }
      break;
    case Kind::Theta:
      if (ky == Kind::Theta) return cmp_theta_theta(x, y);
      break;
    default:
      break;
  }
  throw ComparatorDiagnostic("unhandled principal comparison");
}

}  // namespace

void set_comparator_mutation(ComparatorMutation m) { g_mutation = m; }
ComparatorMutation comparator_mutation() { return g_mutation; }

Cmp compare(const Term& x, const Term& y) {
  if (structural_eq(x, y)) return Cmp::Equal;
  DepthGuard guard;
  Kind kx = x.kind();
  Kind ky = y.kind();
  if (kx == Kind::Zero) return Cmp::Less;  // y != 0 here
  if (ky == Kind::Zero) return Cmp::Greater;
  if (kx == Kind::Nat && ky == Kind::Nat)
    return x.nat_value() < y.nat_value() ? Cmp::Less : Cmp::Greater;
  if (kx == Kind::Sum || ky == Kind::Sum) return cmp_sums(x, y);
  if (kx == Kind::Nat) return Cmp::Less;     // finite vs infinite principal
  if (ky == Kind::Nat) return Cmp::Greater;
  return cmp_principal(x, y);
}

bool lt(const Term& x, const Term& y) { return compare(x, y) == Cmp::Less; }
bool leq(const Term& x, const Term& y) { return compare(x, y) != Cmp::Greater; }
Term max_term(const Term& x, const Term& y) {
  return compare(x, y) == Cmp::Less ? y : x;
}

}  // namespace ot
