#include "ot/lnf.hpp"

#include <utility>

#include "ot/order.hpp"

namespace ot {

namespace {

// A canonical sum splits into L-tower monomials (Lam, L-based theta) up
// front and a strictly smaller remainder; anything < L folds into the
// trailing coefficient triple th_1(0) * t.
bool is_l_tower_part(const Term& part) {
  if (part.kind() == Kind::Lam) return true;
  return part.kind() == Kind::Theta && part.theta_base().kind() == Kind::Lam;
}

}  // namespace

Lnf lnf_decompose(const Term& xi) {
  Lnf view;
  view.base = lam();
  if (xi.kind() == Kind::Zero) return view;

  std::vector<Term> tail;
  for (const Term& part : parts_of(xi)) {
    if (part.kind() == Kind::Lam) {
      view.parts.push_back({one(), one(), one()});
      continue;
    }
    if (is_l_tower_part(part)) {
      view.parts.push_back(
          {part.theta_iter(), part.theta_arg(), part.theta_coeff()});
      continue;
    }
    // Trailing small part; must lie below the base to act as a coefficient.
    if (compare(part, lam()) != Cmp::Less)
      throw DomainError("lnf_decompose: part at or above L has no L-normal form");
    tail.push_back(part);
  }
  if (!tail.empty())
    view.parts.push_back({one(), zero(), sum_of(tail)});
  return view;
}

Term lnf_assemble(const Lnf& view) {
  std::vector<Term> parts;
  parts.reserve(view.parts.size());
  for (const LnfPart& p : view.parts)
    parts.push_back(theta(p.iter, p.arg, p.coeff, view.base));
  return sum_of(parts);
}

Term lnf_head(const Term& xi) {
  if (xi.kind() == Kind::Zero) throw DomainError("lnf_head: head of 0");
  Lnf view = lnf_decompose(xi);
  const LnfPart& p = view.parts.front();
  return theta(p.iter, p.arg, one(), view.base);
}

Term lnf_tail(const Term& xi) {
  if (xi.kind() == Kind::Zero) throw DomainError("lnf_tail: tail of 0");
  Lnf view = lnf_decompose(xi);
  const LnfPart& p = view.parts.back();
  return theta(p.iter, p.arg, one(), view.base);
}

std::vector<Term> segments(const Term& xi) {
  std::vector<Term> out;
  out.push_back(zero());
  if (xi.kind() == Kind::Zero) return out;
  Lnf view = lnf_decompose(xi);
  std::vector<Term> acc;
  for (const LnfPart& p : view.parts) {
    acc.push_back(theta(p.iter, p.arg, p.coeff, view.base));
    out.push_back(sum_of(acc));
  }
  return out;
}

Term theta_minus(const Term& c, const Term& zeta) {
  if (c.kind() == Kind::Zero) return zeta;
  if (zeta.kind() == Kind::Zero)
    throw DomainError("theta_minus: no tower monomial in 0");
  Lnf view = lnf_decompose(zeta);
  if (view.parts.size() != 1)
    throw DomainError("theta_minus: needs a single tower monomial");
  const LnfPart& p = view.parts.front();
  if (!(p.coeff.kind() == Kind::Nat && p.coeff.nat_value() == 1))
    throw DomainError("theta_minus: needs a coefficient-free tower monomial");

  Cmp cb = compare(c, p.iter);
  if (cb == Cmp::Equal) return p.arg;           // th_{b-b} = identity
  if (cb == Cmp::Less) return zeta;             // left subtraction: b - c = b
  // c > b: the remaining iterations descend into the head of the argument.
  Term rest = sub_left(c, p.iter);
  if (p.arg.kind() == Kind::Zero) return zero();
  return theta_minus(rest, lnf_head(p.arg));
}

namespace {

void sc_collect(const Term& xi, std::vector<Term>& out) {
  if (xi.kind() == Kind::Zero) return;
  Lnf view = lnf_decompose(xi);
  for (const LnfPart& p : view.parts) {
    bool seen = false;
    for (const Term& s : out)
      if (structural_eq(s, p.coeff)) { seen = true; break; }
    if (!seen) out.push_back(p.coeff);
    sc_collect(p.arg, out);
  }
}

}  // namespace

std::vector<Term> sc_lambda(const Term& xi) {
  std::vector<Term> out;
  sc_collect(xi, out);
  return out;
}

std::vector<Term> sc_lambda(const FiniteFn& f) {
  std::vector<Term> out;
  for (const auto& [key, value] : f.entries()) {
    bool seen = false;
    for (const Term& s : out)
      if (structural_eq(s, key)) { seen = true; break; }
    if (!seen) out.push_back(key);
    sc_collect(value, out);
  }
  return out;
}

namespace {

Term max_of(const std::vector<Term>& xs) {
  Term m = zero();
  for (const Term& x : xs) m = max_term(m, x);
  return m;
}

}  // namespace

Term max_sc_lambda(const Term& xi) { return max_of(sc_lambda(xi)); }
Term max_sc_lambda(const FiniteFn& f) { return max_of(sc_lambda(f)); }

}  // namespace ot
