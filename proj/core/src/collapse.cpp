#include <vector>

#include "ot/finite_fn.hpp"
#include "ot/hull.hpp"
#include "ot/order.hpp"

namespace ot {

namespace {

Term subst(const Term& t, const Term& rho) {
  // Everything below S is untouched, including terms that mention S inside
  // (collapses below S keep their literal shape).
  if (compare(t, stable()) == Cmp::Less) return t;
  switch (t.kind()) {
    case Kind::S:
      return rho;
    case Kind::Lam:
      return reg(rho);
    case Kind::Sum: {
      std::vector<Term> parts;
      for (const Term& p : t.sum_parts()) parts.push_back(subst(p, rho));
      return sum_of(parts);
    }
    case Kind::Phi:
      return phi(subst(t.phi_a(), rho), subst(t.phi_b(), rho));
    case Kind::Theta: {
      Term base = t.theta_base().kind() == Kind::Lam ? reg(rho)
                                                     : subst(t.theta_base(), rho);
      return theta(subst(t.theta_iter(), rho), subst(t.theta_arg(), rho),
                   subst(t.theta_coeff(), rho), base);
    }
    case Kind::Psi: {
      // Only collapses at or above S reach here; their subscript chain maps
      // below the new regular.
      std::vector<FiniteFn::Entry> entries;
      for (const auto& e : t.psi_fn().entries())
        entries.emplace_back(subst(e.first, rho), subst(e.second, rho));
      return psi(subst(t.psi_sub(), rho), FiniteFn::make(std::move(entries)),
                 subst(t.psi_idx(), rho));
    }
    default:
      // Zero/Nat/Om/Reg are all below S and were handled above.
      throw DomainError("collapse: unexpected shape at or above S");
  }
}

}  // namespace

Term collapse_to(const Term& alpha, const Term& rho) {
  if (rho.kind() != Kind::Psi || !chain_to_S(rho) ||
      compare(rho, stable()) != Cmp::Less)
    throw DomainError("collapse: target must be a chain psi term below S");
  if (!in_M(alpha, rho))
    throw DomainError("collapse: term lies outside the M-class of the target");
  return subst(alpha, rho);
}

}  // namespace ot
