#include <vector>

#include "ot/finite_fn.hpp"
#include "ot/lnf.hpp"
#include "ot/order.hpp"

namespace ot {

Term a_measure(const Term& xi) {
  if (xi.kind() == Kind::Zero) return zero();
  Lnf view = lnf_decompose(xi);
  std::vector<Term> parts;
  parts.reserve(view.parts.size());
  // Coefficients are forgotten; each argument is capped by a factor omega.
  for (const LnfPart& p : view.parts)
    parts.push_back(theta(p.iter, omega_mult(a_measure(p.arg)), one(), lam()));
  return sum_of(parts);
}

namespace {

// Rewrites the L-based skeleton of an a-measure value over the epsilon base
// mu: the L atom becomes mu and L-based towers become mu-based towers.
// Iterates and coefficients live below L and are kept as they are.
Term rebase(const Term& t, const Term& mu) {
  switch (t.kind()) {
    case Kind::Lam:
      return mu;
    case Kind::Sum: {
      std::vector<Term> parts;
      for (const Term& p : t.sum_parts()) parts.push_back(rebase(p, mu));
      return sum_of(parts);
    }
    case Kind::Theta: {
      Term base = t.theta_base().kind() == Kind::Lam ? mu : t.theta_base();
      return theta(t.theta_iter(), rebase(t.theta_arg(), mu), t.theta_coeff(),
                   base);
    }
    case Kind::Phi:
      return phi(rebase(t.phi_a(), mu), rebase(t.phi_b(), mu));
    default:
      return t;
  }
}

Term o_fold(const FiniteFn& f, const Term& base, const Term* mu) {
  // Key ladder c_0 = 0 < c_1 < ... < c_n; the value at 0 is taken to be 0
  // whether or not 0 is in the support.
  std::vector<Term> keys;
  keys.push_back(zero());
  for (const auto& e : f.entries())
    if (e.first.kind() != Kind::Zero) keys.push_back(e.first);

  auto a_of = [&](const Term& v) {
    Term a = a_measure(v);
    return mu ? rebase(a, *mu) : a;
  };

  std::size_t n = keys.size() - 1;
  Term zeta = n == 0 ? zero() : omega_mult(a_of(f.value(keys[n])));
  for (std::size_t i = n; i-- > 0;) {
    Term gap = sub_left(keys[i + 1], keys[i]);
    Term step = theta(gap, succ(zeta), one(), base);
    Term local = i == 0 ? zero() : omega_mult(a_of(f.value(keys[i])));
    zeta = add(local, step);
  }
  return zeta;
}

}  // namespace

Term o_measure(const FiniteFn& f) { return o_fold(f, lam(), nullptr); }

Term o_measure_mu(const FiniteFn& f, const Term& mu) {
  if (!is_epsilon_term(mu) || mu.kind() != Kind::Phi)
    throw DomainError("o_measure_mu: base must be a phi-family epsilon term");
  if (compare(stable(), mu) != Cmp::Less || compare(mu, lam()) != Cmp::Less)
    throw DomainError("o_measure_mu: base must lie strictly between S and L");
  for (const Term& s : sc_lambda(f))
    if (compare(s, mu) != Cmp::Less)
      throw DomainError("o_measure_mu: function coefficients must lie below the base");
  return o_fold(f, mu, &mu);
}

}  // namespace ot
