#include "ot/finite_fn.hpp"

#include "ot/lnf.hpp"
#include "ot/order.hpp"

namespace ot {

FiniteFn fn_below(const FiniteFn& f, const Term& c) {
  std::vector<FiniteFn::Entry> kept;
  for (const auto& e : f.entries())
    if (compare(e.first, c) == Cmp::Less) kept.push_back(e);
  return FiniteFn::make(std::move(kept));
}

FiniteFn fn_from(const FiniteFn& f, const Term& c) {
  std::vector<FiniteFn::Entry> kept;
  for (const auto& e : f.entries())
    if (compare(e.first, c) != Cmp::Less) kept.push_back(e);
  return FiniteFn::make(std::move(kept));
}

FiniteFn fn_concat(const FiniteFn& g, const FiniteFn& f, const Term& c) {
  std::vector<FiniteFn::Entry> kept;
  for (const auto& e : g.entries())
    if (compare(e.first, c) == Cmp::Less) kept.push_back(e);
  for (const auto& e : f.entries())
    if (compare(e.first, c) != Cmp::Less) kept.push_back(e);
  return FiniteFn::make(std::move(kept));
}

FiniteFn fn_set(const FiniteFn& f, const Term& c, const Term& v) {
  std::vector<FiniteFn::Entry> kept;
  for (const auto& e : f.entries())
    if (!structural_eq(e.first, c)) kept.push_back(e);
  if (v.kind() != Kind::Zero) kept.emplace_back(c, v);
  return FiniteFn::make(std::move(kept));
}

bool value_coeff_ok(const Term& xi) {
  if (xi.kind() == Kind::Zero) return true;
  Lnf view;
  try {
    view = lnf_decompose(xi);
  } catch (const DomainError&) {
    return false;  // no L-normal form at all
  }
  for (std::size_t i = 0; i < view.parts.size(); ++i) {
    const LnfPart& p = view.parts[i];
    bool unit = p.coeff.kind() == Kind::Nat && p.coeff.nat_value() == 1;
    if (unit) continue;
    // Only the smallest monomial may carry a coefficient, and only at
    // iterate 1.
    if (i + 1 != view.parts.size()) return false;
    if (!(p.iter.kind() == Kind::Nat && p.iter.nat_value() == 1)) return false;
  }
  return true;
}

bool fn_coeff_ok(const FiniteFn& f) {
  for (const auto& e : f.entries())
    if (!value_coeff_ok(e.second)) return false;
  return true;
}

}  // namespace ot
