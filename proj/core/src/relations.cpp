#include <vector>

#include "ot/finite_fn.hpp"
#include "ot/lnf.hpp"
#include "ot/order.hpp"

namespace ot {

namespace {

// Least support point of f strictly above c, if any.
bool next_key_above(const FiniteFn& f, const Term& c, Term& out) {
  for (const auto& e : f.entries()) {
    if (compare(e.first, c) == Cmp::Greater) {
      out = e.first;
      return true;
    }
  }
  return false;
}

// Ascending union of the two supports.
std::vector<Term> support_union(const FiniteFn& f, const FiniteFn& g) {
  std::vector<Term> keys;
  for (const auto& e : f.entries()) keys.push_back(e.first);
  for (const auto& e : g.entries()) {
    bool seen = false;
    for (const Term& k : keys)
      if (structural_eq(k, e.first)) { seen = true; break; }
    if (!seen) keys.push_back(e.first);
  }
  for (std::size_t i = 1; i < keys.size(); ++i)
    for (std::size_t j = i; j > 0 && lt(keys[j], keys[j - 1]); --j)
      std::swap(keys[j], keys[j - 1]);
  return keys;
}

}  // namespace

bool lt_under(const FiniteFn& f, const Term& c, const Term& xi) {
  if (fn_from(f, c).empty()) return true;
  Term fc = f.value(c);
  Term next;
  bool has_next = next_key_above(f, c, next);
  for (const Term& mu : segments(xi)) {
    if (compare(fc, mu) != Cmp::Less) continue;
    if (!has_next) return true;
    // Recurse one support point up, against what remains of the tail of mu
    // after peeling the gap's worth of iterations.
    Term gap = sub_left(next, c);
    Term rest = theta_minus(gap, lnf_tail(mu));
    if (lt_under(f, next, rest)) return true;
  }
  return false;
}

bool is_irreducible(const FiniteFn& f) {
  if (f.size() <= 1) return true;
  FiniteFn cur = f;
  while (cur.size() >= 2) {
    const auto& es = cur.entries();
    const Term& c = es[es.size() - 2].first;
    const Term& e = es[es.size() - 1].first;
    Term d = sub_left(e, c);
    Term folded_top = theta(d, cur.value(e));
    // The tail of f(c) must strictly dominate the folded-down top monomial.
    if (compare(lnf_tail(cur.value(c)), folded_top) != Cmp::Greater)
      return false;
    Term merged = add(cur.value(c), folded_top);
    cur = fn_set(fn_below(cur, e), c, merged);
  }
  return true;
}

bool lt_lex(const FiniteFn& f, const FiniteFn& g, const Term& b) {
  FiniteFn fa = fn_from(f, b);
  FiniteFn ga = fn_from(g, b);
  if (fa == ga) return false;

  // Least key >= b where the functions disagree.
  Term c;
  bool found = false;
  for (const Term& key : support_union(fa, ga)) {
    if (!structural_eq(fa.value(key), ga.value(key))) {
      c = key;
      found = true;
      break;
    }
  }
  if (!found) return false;  // unreachable: fa != ga

  Term fc = f.value(c);
  Term gc = g.value(c);
  if (compare(fc, gc) == Cmp::Less) {
    // (a) smaller at the first difference: take the shortest segment of
    // g(c) above f(c); every f-support point whose tower reaches back into
    // that segment must itself continue the lexicographic descent.
    Term mu;
    for (const Term& seg : segments(gc))
      if (compare(fc, seg) == Cmp::Less) { mu = seg; break; }
    Term tail = lnf_tail(mu);
    for (const auto& e : f.entries()) {
      if (compare(e.first, c) != Cmp::Greater) continue;
      Term d = sub_left(e.first, c);
      if (compare(tail, theta(d, f.value(e.first))) != Cmp::Greater) {
        if (!lt_lex(f, g, e.first)) return false;
      }
    }
    return true;
  }

  // (b) greater at the first difference: needs a later g-support point that
  // reaches back into the offending segment of f(c) and wins there.
  if (comparator_mutation() == ComparatorMutation::LtLexDropCaseB) return false;
  Term nu;
  for (const Term& seg : segments(fc))
    if (compare(seg, gc) == Cmp::Greater) { nu = seg; break; }
  Term tail = lnf_tail(nu);
  for (const auto& e : g.entries()) {
    if (compare(e.first, c) != Cmp::Greater) continue;
    Term d = sub_left(e.first, c);
    if (compare(tail, theta(d, g.value(e.first))) != Cmp::Greater) {
      if (lt_lex(f, g, e.first)) return true;
    }
  }
  return false;
}

}  // namespace ot
