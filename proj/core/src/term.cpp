#include "ot/term.hpp"

#include <algorithm>
#include <atomic>

#include "ot/order.hpp"

namespace ot {

// ---- Node plumbing ----------------------------------------------------------

namespace {

Term make_node(TermNode n) {
  return Term(std::make_shared<const TermNode>(std::move(n)));
}

Term node0(Kind k) {
  TermNode n;
  n.kind = k;
  return make_node(std::move(n));
}

Term node_kids(Kind k, std::vector<Term> kids) {
  TermNode n;
  n.kind = k;
  n.kids = std::move(kids);
  return make_node(std::move(n));
}

void check_kind(const Term& t, Kind k, const char* what) {
  if (!t.valid_handle() || t.kind() != k) throw DomainError(what);
}

}  // namespace

Kind Term::kind() const { return p_->kind; }
std::uint64_t Term::nat_value() const {
  check_kind(*this, Kind::Nat, "nat_value: not a numeral");
  return p_->nat;
}
const std::vector<Term>& Term::sum_parts() const {
  check_kind(*this, Kind::Sum, "sum_parts: not a sum");
  return p_->kids;
}
const Term& Term::reg_arg() const {
  check_kind(*this, Kind::Reg, "reg_arg: not a reg term");
  return p_->kids[0];
}
const Term& Term::phi_a() const {
  check_kind(*this, Kind::Phi, "phi_a: not a phi term");
  return p_->kids[0];
}
const Term& Term::phi_b() const {
  check_kind(*this, Kind::Phi, "phi_b: not a phi term");
  return p_->kids[1];
}
const Term& Term::psi_sub() const {
  check_kind(*this, Kind::Psi, "psi_sub: not a psi term");
  return p_->kids[0];
}
const Term& Term::psi_idx() const {
  check_kind(*this, Kind::Psi, "psi_idx: not a psi term");
  return p_->kids[1];
}
const FiniteFn& Term::psi_fn() const {
  check_kind(*this, Kind::Psi, "psi_fn: not a psi term");
  return p_->fn;
}
const Term& Term::theta_iter() const {
  check_kind(*this, Kind::Theta, "theta_iter: not a theta term");
  return p_->kids[0];
}
const Term& Term::theta_arg() const {
  check_kind(*this, Kind::Theta, "theta_arg: not a theta term");
  return p_->kids[1];
}
const Term& Term::theta_coeff() const {
  check_kind(*this, Kind::Theta, "theta_coeff: not a theta term");
  return p_->kids[2];
}
const Term& Term::theta_base() const {
  check_kind(*this, Kind::Theta, "theta_base: not a theta term");
  return p_->kids[3];
}

bool operator==(const Term& a, const Term& b) { return structural_eq(a, b); }

// ---- Structural identity ----------------------------------------------------

static std::size_t hash_mix(std::size_t h, std::size_t v) {
  // boost-style combine
  return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

std::size_t term_hash(const Term& t) {
  if (!t.valid_handle()) return 0;
  const TermNode& n = t.node();
  std::size_t h = static_cast<std::size_t>(n.kind) * 0x100000001b3ull + 1469598103934665603ull;
  h = hash_mix(h, static_cast<std::size_t>(n.nat));
  for (const Term& k : n.kids) h = hash_mix(h, term_hash(k));
  for (const auto& [key, val] : n.fn.entries()) {
    h = hash_mix(h, term_hash(key));
    h = hash_mix(h, term_hash(val));
  }
  return h == 0 ? 1 : h;
}

bool structural_eq(const Term& a, const Term& b) {
  if (a.get() == b.get()) return true;
  if (!a.valid_handle() || !b.valid_handle()) return false;
  const TermNode& na = a.node();
  const TermNode& nb = b.node();
  if (na.kind != nb.kind || na.nat != nb.nat) return false;
  if (na.kids.size() != nb.kids.size()) return false;
  for (std::size_t i = 0; i < na.kids.size(); ++i)
    if (!structural_eq(na.kids[i], nb.kids[i])) return false;
  if (na.fn.size() != nb.fn.size()) return false;
  for (std::size_t i = 0; i < na.fn.size(); ++i) {
    if (!structural_eq(na.fn.entries()[i].first, nb.fn.entries()[i].first)) return false;
    if (!structural_eq(na.fn.entries()[i].second, nb.fn.entries()[i].second)) return false;
  }
  return true;
}

// ---- FiniteFn ---------------------------------------------------------------

FiniteFn FiniteFn::make(std::vector<Entry> entries) {
  std::erase_if(entries, [](const Entry& e) { return e.second.kind() == Kind::Zero; });
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return compare(a.first, b.first) == Cmp::Less;
  });
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (structural_eq(entries[i - 1].first, entries[i].first))
      throw DomainError("finite function: duplicate key");
  FiniteFn f;
  f.entries_ = std::move(entries);
  return f;
}

std::vector<Term> FiniteFn::support() const {
  std::vector<Term> keys;
  keys.reserve(entries_.size());
  for (const auto& [k, v] : entries_) keys.push_back(k);
  return keys;
}

Term FiniteFn::value(const Term& c) const {
  for (const auto& [k, v] : entries_)
    if (structural_eq(k, c)) return v;
  return zero();
}

bool operator==(const FiniteFn& a, const FiniteFn& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!structural_eq(a.entries()[i].first, b.entries()[i].first)) return false;
    if (!structural_eq(a.entries()[i].second, b.entries()[i].second)) return false;
  }
  return true;
}

// ---- Atoms ------------------------------------------------------------------

Term zero() {
  static const Term t = node0(Kind::Zero);
  return t;
}
Term one() {
  static const Term t = [] {
    TermNode n;
    n.kind = Kind::Nat;
    n.nat = 1;
    return make_node(std::move(n));
  }();
  return t;
}
Term nat(std::uint64_t v) {
  if (v == 0) return zero();
  if (v == 1) return one();
  TermNode n;
  n.kind = Kind::Nat;
  n.nat = v;
  return make_node(std::move(n));
}
Term om() {
  static const Term t = node0(Kind::Om);
  return t;
}
Term stable() {
  static const Term t = node0(Kind::S);
  return t;
}
Term lam() {
  static const Term t = node0(Kind::Lam);
  return t;
}

// ---- Classification helpers -------------------------------------------------

bool is_strongly_critical_atom(const Term& t) {
  switch (t.kind()) {
    case Kind::Om:
    case Kind::S:
    case Kind::Lam:
    case Kind::Reg:
    case Kind::Psi:
      return true;
    default:
      return false;
  }
}

bool is_epsilon_term(const Term& t) {
  if (is_strongly_critical_atom(t)) return true;
  if (t.kind() == Kind::Phi) return t.phi_a().kind() != Kind::Zero;
  if (t.kind() == Kind::Theta)
    return t.theta_iter().kind() != Kind::Nat &&  // transfinite iterate
           t.theta_coeff().kind() == Kind::Nat && t.theta_coeff().nat_value() == 1;
  return false;
}

bool chain_to_S(const Term& t) {
  if (t.kind() != Kind::Psi) return false;
  const Term& sub = t.psi_sub();
  if (sub.kind() == Kind::S) return true;
  return chain_to_S(sub);
}

bool is_regular_term(const Term& t) {
  switch (t.kind()) {
    case Kind::Om:
    case Kind::Reg:
      return true;
    case Kind::Psi:
      return chain_to_S(t);
    default:
      return false;
  }
}

bool is_principal(const Term& t) {
  switch (t.kind()) {
    case Kind::Zero:
    case Kind::Sum:
      return false;
    case Kind::Nat:
      return t.nat_value() == 1;
    case Kind::Theta:
      return is_principal(t.theta_coeff());
    default:
      return true;
  }
}

bool has_tower_part(const Term& t) {
  for (const Term& p : parts_of(t)) {
    switch (p.kind()) {
      case Kind::Lam:
      case Kind::Theta:
        return true;
      case Kind::Phi:
        if (p.phi_a().kind() != Kind::Zero) return true;
        break;
      default:
        break;
    }
  }
  return false;
}

// ---- Additive structure -----------------------------------------------------

std::vector<Term> parts_of(const Term& t) {
  switch (t.kind()) {
    case Kind::Zero:
      return {};
    case Kind::Sum:
      return t.sum_parts();
    default:
      return {t};
  }
}

// A monomial base is "coefficient-carrying" when repeated occurrences merge
// into a stored coefficient rather than adjacent parts: numerals and the
// theta family (L itself is th(1,1)).
static bool carries_coeff(const Term& base) {
  return base.kind() == Kind::Lam || base.kind() == Kind::Reg ||
         base.kind() == Kind::Theta ||
         (base.kind() == Kind::Nat && base.nat_value() == 1);
}

Term mono_base(const Term& part) {
  switch (part.kind()) {
    case Kind::Nat:
      return one();
    case Kind::Theta: {
      const Term& c = part.theta_coeff();
      if (c.kind() == Kind::Nat && c.nat_value() == 1) return part;
      return theta(part.theta_iter(), part.theta_arg(), one(), part.theta_base());
    }
    default:
      return part;
  }
}

Term mono_coeff(const Term& part) {
  switch (part.kind()) {
    case Kind::Nat:
      return part;
    case Kind::Theta:
      return part.theta_coeff();
    default:
      return one();
  }
}

Term mono_make(const Term& base, const Term& coeff) {
  if (coeff.kind() == Kind::Zero) return zero();
  if (coeff.kind() == Kind::Nat && coeff.nat_value() == 1) return base;
  switch (base.kind()) {
    case Kind::Nat:  // base 1
      return coeff;
    case Kind::Lam:
    case Kind::Reg:
      return theta(one(), one(), coeff, base);
    case Kind::Theta:
      return theta(base.theta_iter(), base.theta_arg(), coeff, base.theta_base());
    default:
      throw DomainError("mono_make: base cannot carry a coefficient");
  }
}

static Term build_sum(std::vector<Term> parts) {
  if (parts.empty()) return zero();
  if (parts.size() == 1) return parts[0];
  return node_kids(Kind::Sum, std::move(parts));
}

Term add(const Term& x, const Term& y) {
  if (x.kind() == Kind::Zero) return y;
  if (y.kind() == Kind::Zero) return x;
  if (x.kind() == Kind::Nat && y.kind() == Kind::Nat)
    return nat(x.nat_value() + y.nat_value());
  std::vector<Term> px = parts_of(x);
  std::vector<Term> py = parts_of(y);
  const Term h = mono_base(py.front());
  std::vector<Term> out;
  out.reserve(px.size() + py.size());
  for (std::size_t i = 0; i < px.size(); ++i) {
    Cmp c = compare(mono_base(px[i]), h);
    if (c == Cmp::Greater) {
      out.push_back(px[i]);
      continue;
    }
    if (c == Cmp::Equal) {
      if (carries_coeff(h)) {
        // merge coefficients: B*c1 + B*c2 + rest = B*(c1+c2) + rest
        py.front() = mono_make(h, add(mono_coeff(px[i]), mono_coeff(py.front())));
        break;
      }
      out.push_back(px[i]);  // coefficient-free principals stack up
      continue;
    }
    break;  // everything from here on is absorbed by the head of y
  }
  out.insert(out.end(), py.begin(), py.end());
  return build_sum(std::move(out));
}

Term sum_of(const std::vector<Term>& parts) {
  Term acc = zero();
  for (const Term& p : parts) acc = add(acc, p);
  return acc;
}

Term succ(const Term& x) { return add(x, one()); }

Term sub_left(const Term& x, const Term& y) {
  if (y.kind() == Kind::Zero) return x;
  Cmp c = compare(x, y);
  if (c == Cmp::Less) throw DomainError("sub_left: minuend smaller than subtrahend");
  if (c == Cmp::Equal) return zero();
  // Numerals are their own coefficients, so without this base case the
  // coefficient recursion below would never shrink them.
  if (x.kind() == Kind::Nat && y.kind() == Kind::Nat)
    return nat(x.nat_value() - y.nat_value());
  std::vector<Term> px = parts_of(x);
  std::vector<Term> py = parts_of(y);
  for (std::size_t i = 0; i < px.size(); ++i) {
    if (i >= py.size())
      return build_sum(std::vector<Term>(px.begin() + i, px.end()));
    if (structural_eq(px[i], py[i])) continue;
    const Term bx = mono_base(px[i]);
    const Term by = mono_base(py[i]);
    Cmp bc = compare(bx, by);
    if (bc == Cmp::Greater)
      return build_sum(std::vector<Term>(px.begin() + i, px.end()));
    if (bc == Cmp::Less) break;  // unreachable: y would exceed x
    // same coefficient-carrying base, different coefficients
    std::vector<Term> out;
    out.push_back(mono_make(bx, sub_left(mono_coeff(px[i]), mono_coeff(py[i]))));
    out.insert(out.end(), px.begin() + i + 1, px.end());
    return build_sum(std::move(out));
  }
  throw DomainError("sub_left: inconsistent decomposition");
}

// ---- omega powers, products -------------------------------------------------

namespace {

// log_omega of an additively principal term: the e with omega^e = value.
Term omega_log(const Term& p) {
  switch (p.kind()) {
    case Kind::Nat:
      return zero();  // principal numeral is 1
    case Kind::Om:
    case Kind::S:
    case Kind::Reg:
    case Kind::Psi:
      return p;  // epsilon (in fact strongly critical)
    case Kind::Lam:
      return p;
    case Kind::Phi:
      return p.phi_a().kind() == Kind::Zero ? p.phi_b() : p;
    case Kind::Theta: {
      if (p.theta_iter().kind() != Kind::Nat) return p;  // formal epsilon
      // log(B^xi) = B * xi, and th(1,1,c) has log B*... folded via coeff below
      Term base_log = mul(p.theta_base(), p.theta_arg());
      const Term& c = p.theta_coeff();
      if (c.kind() == Kind::Nat && c.nat_value() == 1) return base_log;
      return add(base_log, omega_log(c));  // (B^xi)*c with c principal
    }
    default:
      throw DomainError("omega_log: not additively principal");
  }
}

}  // namespace

Term omega_mult(const Term& x) {
  if (x.kind() == Kind::Zero) return zero();
  Term acc = zero();
  for (const Term& part : parts_of(x)) {
    const Term b = mono_base(part);
    const Term c = mono_coeff(part);
    Term nb;
    if (b.kind() == Kind::Nat) {
      // omega * n = omega * n (a base-omega monomial)
      acc = add(acc, mul(phi(zero(), one()), c));
      continue;
    }
    if (b.kind() == Kind::Phi && b.phi_a().kind() == Kind::Zero)
      nb = phi(zero(), add(one(), b.phi_b()));
    else
      nb = b;  // epsilon-or-higher bases absorb a leading omega
    // only theta-family parts carry a coefficient != 1 here, and their base
    // is epsilon, so mono_make never sees a repeating base with it
    acc = add(acc, mono_make(nb, c));
  }
  return acc;
}

Term mk_omega_tower(std::uint32_t height, const Term& a) {
  Term t = a;
  for (std::uint32_t i = 0; i < height; ++i) t = phi(zero(), t);
  return t;
}

// ---- phi and the omega-power/tower rewrite ----------------------------------

namespace {

// For a coefficient-1 tower monomial T over base B: the e with B^e = omega^T.
Term theta_log(const Term& T, const Term& B) {
  if (structural_eq(T, B)) return one();
  if (T.kind() != Kind::Theta) throw DomainError("theta_log: not a tower monomial");
  if (T.theta_iter().kind() != Kind::Nat) return T;  // formal epsilon: omega^T = T = B^T
  const Term& xi = T.theta_arg();
  if (xi.kind() == Kind::Nat)  // B^xi with finite xi >= 2: omega^(B^xi) = B^(B^(xi-1))
    return theta(one(), nat(xi.nat_value() - 1), one(), B);
  return T;  // infinite xi: 1 + xi = xi, so omega^(B^xi) = B^(B^xi)
}

Term phi_node(const Term& a, const Term& b) {
  return node_kids(Kind::Phi, {a, b});
}

// omega^y when y has tower parts: rewrite into the canonical theta form
// (omega^(L*xi) = L^xi and the mu-based analogue).  Mixed bases stay as a
// phi node: no tower spelling exists for them.
Term omega_exp(const Term& y) {
  Term base;  // unset until the first tower part fixes the zone
  Term e = zero();
  std::vector<Term> small;
  for (const Term& part : parts_of(y)) {
    Kind pk = part.kind();
    bool tower_family = pk == Kind::Lam || pk == Kind::Theta ||
                        (pk == Kind::Phi && part.phi_a().kind() != Kind::Zero);
    if (!tower_family) {
      small.push_back(part);
      continue;
    }
    Term b = pk == Kind::Lam ? lam()
             : pk == Kind::Theta ? part.theta_base()
                                 : part;
    if (base.valid_handle() && !structural_eq(base, b)) {
      // Sums descend, so a tower-family part under an established larger
      // base is coefficient content; a genuinely different zone has no
      // single-tower spelling.
      if (compare(part, base) == Cmp::Less) {
        small.push_back(part);
        continue;
      }
      return phi_node(zero(), y);
    }
    if (!base.valid_handle()) {
      if (!small.empty()) return phi_node(zero(), y);  // larger head outranks it
      base = b;
    }
    if (pk == Kind::Phi)
      e = add(e, one());  // epsilon parts repeat; each contributes B^1
    else
      e = add(e, mul(theta_log(mono_base(part), base), mono_coeff(part)));
  }
  Term r = sum_of(small);
  Term coeff = r.kind() == Kind::Zero ? one() : phi(zero(), r);
  return theta(one(), e, coeff, base);
}

}  // namespace

Term phi(const Term& a, const Term& b) {
  if (a.kind() == Kind::Zero && b.kind() == Kind::Zero) return one();
  // Fixed points: phi_a(b) = b for phi-closed b above a.
  if (is_strongly_critical_atom(b) && lt(a, b)) return b;
  if (b.kind() == Kind::Phi && lt(a, b.phi_a())) return b;
  if (b.kind() == Kind::Theta && a.kind() == Kind::Zero && is_epsilon_term(b))
    return b;  // omega^formal-epsilon
  if (a.kind() == Kind::Zero) {
    if (has_tower_part(b)) return omega_exp(b);
    return phi_node(zero(), b);
  }
  if (b.kind() == Kind::Zero && is_strongly_critical_atom(a)) return a;
  return phi_node(a, b);
}

Term mul(const Term& x, const Term& y) {
  if (x.kind() == Kind::Zero || y.kind() == Kind::Zero) return zero();
  if (x.kind() == Kind::Nat && x.nat_value() == 1) return y;
  if (y.kind() == Kind::Nat && y.nat_value() == 1) return x;
  if (x.kind() == Kind::Nat && y.kind() == Kind::Nat)
    return nat(x.nat_value() * y.nat_value());

  if (y.kind() == Kind::Nat) {
    // (H + rest) * n = base(H)*(coeff(H)*n) + rest
    std::vector<Term> px = parts_of(x);
    const Term hb = mono_base(px.front());
    const Term hc = mono_coeff(px.front());
    Term scaled_c = mul(hc, y);
    std::vector<Term> out;
    if (carries_coeff(hb)) {
      out.push_back(mono_make(hb, scaled_c));
    } else {
      if (scaled_c.kind() != Kind::Nat || scaled_c.nat_value() > 65536)
        throw DomainError("mul: product too large to represent");
      for (std::uint64_t i = 0; i < scaled_c.nat_value(); ++i) out.push_back(hb);
    }
    out.insert(out.end(), px.begin() + 1, px.end());
    return build_sum(std::move(out));
  }

  // Distribute over the right argument: x * (sum of B_i*c_i + n).
  Term acc = zero();
  const Term lx = omega_log(mono_base(parts_of(x).front()));
  for (const Term& part : parts_of(y)) {
    if (part.kind() == Kind::Nat) {
      acc = add(acc, mul(x, part));
      continue;
    }
    const Term b = mono_base(part);
    const Term c = mono_coeff(part);
    Term w = phi(zero(), add(lx, omega_log(b)));  // x * B = omega^(log x + log B)
    Term scaled;
    if (c.kind() == Kind::Nat && c.nat_value() == 1)
      scaled = w;
    else if (carries_coeff(mono_base(w)))
      scaled = mono_make(mono_base(w), mul(mono_coeff(w), c));
    else
      scaled = mul(w, c);
    acc = add(acc, scaled);
  }
  return acc;
}

// ---- theta ------------------------------------------------------------------

namespace {

Term theta_single(const Term& b, const Term& x, const Term& base) {
  // b additively principal, coefficient-1 tower over the given base
  bool b_is_one = b.kind() == Kind::Nat && b.nat_value() == 1;
  if (b_is_one) {
    if (x.kind() == Kind::Zero) return one();
    if (x.kind() == Kind::Nat && x.nat_value() == 1) return base;
    // omega^(B*eps) = eps for a formal epsilon over the same base
    if (x.kind() == Kind::Theta && structural_eq(x.theta_base(), base) &&
        is_epsilon_term(x))
      return x;
  }
  return node_kids(Kind::Theta, {b, x, one(), base});
}

Term apply_iter(Term t, const Term& iter, const Term& base) {
  // th_{p+q} = th_q o th_p: largest summand acts first (innermost)
  for (const Term& part : parts_of(iter)) {
    if (is_principal(part)) {
      t = theta_single(mono_base(part).kind() == Kind::Nat ? one() : part, t, base);
      continue;
    }
    const Term b = mono_base(part);
    const Term c = mono_coeff(part);
    if (c.kind() == Kind::Nat) {
      for (std::uint64_t i = 0; i < c.nat_value(); ++i) t = theta_single(b, t, base);
      continue;
    }
    // b*c with transfinite non-principal c: distribute c's own parts
    for (const Term& cpart : parts_of(c)) t = apply_iter(t, mul(b, cpart), base);
  }
  return t;
}

}  // namespace

Term theta(const Term& iter, const Term& arg) { return theta(iter, arg, one(), lam()); }
Term theta(const Term& iter, const Term& arg, const Term& coeff) {
  return theta(iter, arg, coeff, lam());
}

Term theta(const Term& iter, const Term& arg, const Term& coeff, const Term& base) {
  if (coeff.kind() == Kind::Zero) return zero();
  if (iter.kind() == Kind::Zero) {
    bool c1 = coeff.kind() == Kind::Nat && coeff.nat_value() == 1;
    return c1 ? arg : mul(arg, coeff);
  }
  Term t = apply_iter(arg, iter, base);
  // attach the coefficient
  if (coeff.kind() == Kind::Nat && coeff.nat_value() == 1) return t;
  if (t.kind() == Kind::Nat && t.nat_value() == 1) return coeff;  // 1 * c
  if (t.kind() == Kind::Theta) {
    const Term& c0 = t.theta_coeff();
    if (c0.kind() == Kind::Nat && c0.nat_value() == 1)
      return node_kids(Kind::Theta,
                       {t.theta_iter(), t.theta_arg(), coeff, t.theta_base()});
    return mul(t, coeff);  // tower already carries a coefficient
  }
  // t is the base atom itself.  L and reg(.) carry coefficients in place;
  // epsilon phi atoms only carry transfinite ones (finite multiples are
  // repeated sums, matching what + does with them).
  if (t.kind() == Kind::Lam || t.kind() == Kind::Reg ||
      coeff.kind() != Kind::Nat)
    return node_kids(Kind::Theta, {one(), one(), coeff, t});
  return mul(t, coeff);
}

// ---- reg --------------------------------------------------------------------

Term reg(const Term& x) {
  if (x.kind() == Kind::Zero) return om();
  if (is_regular_term(x)) return node_kids(Kind::Reg, {x});
  if (compare(x, stable()) != Cmp::Less)
    return node_kids(Kind::Reg, {x});  // out of domain; flagged by validate_ot
  if (compare(x, om()) == Cmp::Less) return om();
  // Regular floor: the largest regular-valued subterm with value <= x.  The
  // regulars below S are exactly the values of Om / reg-chains / psi terms
  // whose subscript chain passes S, and any term at or above Om mentions one.
  Term best;
  for (const Term& s : subterms(x)) {
    if (!is_regular_term(s)) continue;
    if (compare(s, x) == Cmp::Greater) continue;
    if (!best.valid_handle() || compare(s, best) == Cmp::Greater) best = s;
  }
  if (!best.valid_handle()) return om();
  return node_kids(Kind::Reg, {best});
}

// ---- psi --------------------------------------------------------------------

Term psi(const Term& sub, const Term& idx) { return psi(sub, FiniteFn(), idx); }

Term psi(const Term& sub, const FiniteFn& fn, const Term& idx) {
  TermNode n;
  n.kind = Kind::Psi;
  n.kids = {sub, idx};
  n.fn = fn;
  return make_node(std::move(n));
}

// ---- Size and traversal -----------------------------------------------------

std::uint64_t node_count(const Term& t) {
  switch (t.kind()) {
    case Kind::Zero:
    case Kind::Om:
    case Kind::S:
    case Kind::Lam:
      return 1;
    case Kind::Nat:
      return t.nat_value() + 1;
    case Kind::Reg:
      return 1 + node_count(t.reg_arg());
    case Kind::Sum: {
      std::uint64_t n = 0;
      for (const Term& p : t.sum_parts()) n += node_count(p);
      return n;
    }
    case Kind::Phi:
      return 1 + node_count(t.phi_a()) + node_count(t.phi_b());
    case Kind::Theta: {
      std::uint64_t n = 1 + node_count(t.theta_arg());
      const Term& it = t.theta_iter();
      if (!(it.kind() == Kind::Nat && it.nat_value() == 1)) n += node_count(it);
      const Term& c = t.theta_coeff();
      if (!(c.kind() == Kind::Nat && c.nat_value() == 1)) n += node_count(c);
      if (t.theta_base().kind() != Kind::Lam) n += node_count(t.theta_base());
      return n;
    }
    case Kind::Psi: {
      std::uint64_t n = 1 + node_count(t.psi_sub()) + node_count(t.psi_idx());
      for (const auto& [k, v] : t.psi_fn().entries()) {
        if (k.kind() != Kind::Zero) n += node_count(k);
        n += node_count(v);
      }
      return n;
    }
  }
  return 1;
}

namespace {
void subterms_rec(const Term& t, std::vector<Term>& out) {
  for (const Term& s : out)
    if (structural_eq(s, t)) return;
  out.push_back(t);
  const TermNode& n = t.node();
  for (const Term& k : n.kids) subterms_rec(k, out);
  for (const auto& [key, val] : n.fn.entries()) {
    subterms_rec(key, out);
    subterms_rec(val, out);
  }
}
}  // namespace

std::vector<Term> subterms(const Term& t) {
  std::vector<Term> out;
  subterms_rec(t, out);
  return out;
}

// ---- least epsilon above ----------------------------------------------------

namespace {
// Next epsilon-valued term after an epsilon-valued m.
Term next_eps_after(const Term& m) {
  if (m.kind() == Kind::Phi && structural_eq(m.phi_a(), one()))
    return phi(one(), succ(m.phi_b()));
  if (m.kind() == Kind::Theta && m.theta_iter().kind() != Kind::Nat)
    // formal tower fixed points: the successor stage bounds the next epsilon
    return theta(m.theta_iter(), succ(m.theta_arg()), one(), m.theta_base());
  return phi(one(), succ(m));  // strongly critical m: m = eps_m
}
}  // namespace

Term least_eps_above(const Term& x) {
  if (compare(x, stable()) != Cmp::Greater) return phi(one(), succ(stable()));
  if (is_epsilon_term(x)) return next_eps_after(x);
  // x is epsilon-free above its largest epsilon-valued subterm, so the next
  // epsilon after that subterm is still above x.
  Term m = stable();
  for (const Term& s : subterms(x)) {
    if (!is_epsilon_term(s)) continue;
    if (compare(s, x) == Cmp::Greater) continue;
    if (compare(s, m) == Cmp::Greater) m = s;
  }
  return next_eps_after(m);
}

}  // namespace ot
