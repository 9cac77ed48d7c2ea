#include "doctest.h"

#include "ot/finite_fn.hpp"
#include "ot/term.hpp"

using namespace ot;

TEST_CASE("numerals merge and order") {
  CHECK(structural_eq(add(nat(2), nat(3)), nat(5)));
  CHECK(structural_eq(one(), nat(1)));
  CHECK(structural_eq(succ(zero()), one()));
  CHECK(nat(7).nat_value() == 7);
}

TEST_CASE("canonical aliases of the atoms") {
  CHECK(structural_eq(theta(one(), one()), lam()));       // first tower power
  CHECK(structural_eq(theta(one(), zero()), one()));      // empty tower
  CHECK(structural_eq(phi(zero(), zero()), one()));
  CHECK(structural_eq(reg(zero()), om()));
  CHECK(structural_eq(reg(nat(3)), om()));  // regular floor below Om
  CHECK(reg(om()).kind() == Kind::Reg);
}

TEST_CASE("sums absorb and merge like Cantor normal forms") {
  CHECK(structural_eq(add(one(), om()), om()));  // left part absorbed
  Term s = add(om(), nat(3));
  REQUIRE(s.kind() == Kind::Sum);
  CHECK(s.sum_parts().size() == 2);
  CHECK(structural_eq(add(om(), om()), mul(om(), nat(2))));
  CHECK(structural_eq(add(add(om(), one()), om()), mul(om(), nat(2))));
  CHECK(structural_eq(sum_of({}), zero()));
}

TEST_CASE("tower coefficients stay on the node") {
  Term l2 = mul(lam(), nat(2));
  REQUIRE(l2.kind() == Kind::Theta);
  CHECK(structural_eq(l2.theta_coeff(), nat(2)));
  CHECK(structural_eq(l2.theta_base(), lam()));
  CHECK(structural_eq(add(lam(), lam()), l2));
  // The collapsed-regular image L -> reg(rho) carries coefficients the same
  // way.
  Term rho = psi(stable(), FiniteFn::make({{zero(), lam()}}), one());
  Term r = reg(rho);
  CHECK(structural_eq(add(r, r), theta(one(), one(), nat(2), r)));
}

TEST_CASE("omega powers with tower content take theta form") {
  CHECK(structural_eq(phi(zero(), mul(lam(), nat(2))), theta(one(), nat(2))));
  CHECK(structural_eq(phi(zero(), lam()), lam()));  // epsilon fixed point
  CHECK(structural_eq(mk_omega_tower(2, succ(lam())),
                      theta(one(), phi(zero(), one()))));
  CHECK(structural_eq(phi(zero(), succ(lam())),
                      theta(one(), one(), phi(zero(), one()))));
}

TEST_CASE("left subtraction inverts addition") {
  Term x = add(om(), nat(3));
  CHECK(structural_eq(sub_left(x, om()), nat(3)));
  CHECK(structural_eq(sub_left(x, x), zero()));
  CHECK(structural_eq(sub_left(phi(zero(), one()), one()), phi(zero(), one())));
  CHECK_THROWS_AS(sub_left(om(), x), DomainError);
}

TEST_CASE("node sizes for enumeration budgets") {
  CHECK(node_count(zero()) == 1);
  CHECK(node_count(lam()) == 1);
  CHECK(node_count(nat(3)) == 4);
  CHECK(node_count(psi(om(), zero())) == 3);
}

TEST_CASE("classification predicates") {
  CHECK(is_principal(om()));
  CHECK(is_principal(phi(zero(), one())));
  CHECK(!is_principal(add(om(), one())));
  CHECK(is_epsilon_term(lam()));
  CHECK(is_epsilon_term(phi(one(), zero())));
  CHECK(!is_epsilon_term(phi(zero(), one())));
  CHECK(is_regular_term(om()));
  CHECK(is_regular_term(reg(om())));
  Term rho = psi(stable(), FiniteFn::make({{zero(), lam()}}), one());
  CHECK(is_regular_term(rho));
  CHECK(chain_to_S(rho));
  CHECK(!chain_to_S(psi(om(), zero())));
}

TEST_CASE("least epsilon strictly above") {
  CHECK(structural_eq(least_eps_above(om()), phi(one(), succ(stable()))));
  CHECK(structural_eq(least_eps_above(zero()), phi(one(), succ(stable()))));
}

TEST_CASE("monomial views rebuild their part") {
  Term s = add(mul(om(), nat(2)), one());
  for (const Term& p : s.sum_parts())
    CHECK(structural_eq(mono_make(mono_base(p), mono_coeff(p)), p));
}

TEST_CASE("finite functions sort, drop zeros, reject duplicates") {
  FiniteFn f = FiniteFn::make({{one(), lam()}, {zero(), om()}});
  REQUIRE(f.size() == 2);
  CHECK(structural_eq(f.entries()[0].first, zero()));
  CHECK(structural_eq(f.value(one()), lam()));
  CHECK(structural_eq(f.value(nat(5)), zero()));
  CHECK(FiniteFn::make({{zero(), zero()}}).empty());
  CHECK_THROWS_AS(FiniteFn::make({{zero(), om()}, {zero(), lam()}}),
                  DomainError);
}

TEST_CASE("value coefficient discipline") {
  // Only the last (smallest) part may carry a coefficient, and only at
  // iterate one.
  CHECK(value_coeff_ok(lam()));
  CHECK(value_coeff_ok(mul(lam(), nat(3))));
  CHECK(value_coeff_ok(add(theta(one(), om()), nat(7))));
  CHECK(value_coeff_ok(add(theta(one(), om()), mul(lam(), nat(3)))));
  CHECK(!value_coeff_ok(add(mul(theta(one(), om()), nat(2)), one())));
}
