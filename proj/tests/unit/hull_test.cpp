#include "doctest.h"

#include "ot/finite_fn.hpp"
#include "ot/hull.hpp"
#include "ot/order.hpp"
#include "ot/textio.hpp"

using namespace ot;

namespace {

Term w() { return phi(zero(), one()); }

Term rho(std::uint32_t k) {
  return psi(stable(), FiniteFn::make({{zero(), lam()}}), nat(k));
}

// A stable collapse whose function sits at key 1, so step-downs below it
// have an admissible cut at 0.
Term sigma() {
  return psi(stable(), FiniteFn::make({{one(), lam()}}), one());
}

Term chain_step() {
  return psi(sigma(), FiniteFn::make({{zero(), lam()}}), nat(2));
}

}  // namespace

TEST_CASE("hull membership") {
  // Atoms and numerals are in every hull.
  CHECK(in_hull(stable(), zero(), zero()));
  CHECK(in_hull(nat(7), zero(), zero()));
  // The initial segment below beta is in wholesale.
  CHECK(in_hull(psi(om(), zero()), zero(), om()));
  // Collapses re-enter only at indices below the stage.
  CHECK(in_hull(psi(om(), one()), nat(2), psi(om(), zero())));
  CHECK_FALSE(in_hull(psi(om(), one()), one(), psi(om(), zero())));
  CHECK_FALSE(in_hull(psi(om(), om()), zero(), psi(om(), zero())));
  // Larger stages only ever admit more.
  CHECK(in_hull(rho(1), lam(), psi(om(), zero())));
  CHECK_FALSE(in_hull(rho(1), one(), psi(om(), zero())));
  // Composite terms need every component inside.
  CHECK(in_hull(add(om(), one()), zero(), zero()));
  CHECK_FALSE(in_hull(add(rho(1), one()), one(), rho(1)));
  CHECK_FALSE(in_hull(theta(one(), w(), one(), reg(rho(1))), one(), rho(1)));
}

TEST_CASE("closure membership") {
  std::vector<Term> X = {rho(1)};
  // Listed generators enter below the cut even when no former applies.
  CHECK(in_closure(rho(1), stable(), X));
  CHECK_FALSE(in_closure(rho(1), stable(), {}));
  CHECK_FALSE(in_closure(rho(1), lam(), {}));
  // The collapse former stays open while the subscript exceeds the cut.
  CHECK(in_closure(rho(1), om(), {}));
  CHECK(in_closure(psi(om(), zero()), zero(), {}));
  CHECK_FALSE(in_closure(psi(om(), zero()), om(), {}));
  CHECK(in_closure(psi(om(), zero()), om(), {psi(om(), zero())}));
  // Unlisted terms need a former; sums admit part by part.
  CHECK_FALSE(in_closure(rho(2), stable(), X));
  CHECK(in_closure(add(rho(1), one()), stable(), X));
  CHECK_FALSE(in_closure(add(rho(2), one()), stable(), X));
}

TEST_CASE("well-formed terms pass validation") {
  for (const Term& t : {zero(), one(), om(), stable(), lam(),
                        psi(om(), zero()), psi(om(), om()),
                        psi(om(), mul(om(), nat(2))),
                        psi(om(), psi(om(), zero())),
                        theta(one(), w()), mul(lam(), nat(3)),
                        rho(1), rho(2), reg(rho(1)), sigma(), chain_step()}) {
    ValidationReport rep = validate_ot(t);
    CAPTURE(print_term(t));
    CHECK(rep.ok);
    CHECK(rep.issues.empty());
  }
}

TEST_CASE("ill-formed terms are reported") {
  // Stable collapse without its single function entry.
  CHECK_FALSE(validate_ot(psi(stable(), zero())).ok);
  // Function coefficients exceeding those of the index.
  CHECK_FALSE(validate_ot(psi(stable(), FiniteFn::make({{zero(), lam()}}),
                              zero())).ok);
  // reg of something that is not a regular value below S.
  CHECK_FALSE(validate_ot(reg(stable())).ok);
  CHECK_FALSE(validate_ot(reg(lam())).ok);
  // Numeral subscripts are not regular.
  CHECK_FALSE(validate_ot(psi(nat(3), zero())).ok);
  // Tower coefficient at or above the base.
  CHECK_FALSE(validate_ot(theta(one(), w(), lam())).ok);
  // No step-down cut exists against a function supported only at 0.
  CHECK_FALSE(validate_ot(psi(rho(1), FiniteFn::make({{zero(), lam()}}),
                              nat(2))).ok);
  ValidationReport rep = validate_ot(psi(stable(), zero()));
  REQUIRE_FALSE(rep.issues.empty());
  CHECK_FALSE(rep.issues.front().reason.empty());
}

TEST_CASE("collapse attributes") {
  CHECK(structural_eq(attrs(om()).bigO, one()));
  CHECK(structural_eq(attrs(stable()).bigO, lam()));
  CHECK_THROWS_AS(attrs(lam()), DomainError);

  PsiAttrs a = attrs(rho(1));
  CHECK(a.chain_to_s);
  CHECK(structural_eq(a.p0, one()));
  CHECK(structural_eq(a.lam, phi(one(), succ(stable()))));
  CHECK(structural_eq(a.bigO, zero()));
  CHECK(a.m == FiniteFn::make({{zero(), lam()}}));

  PsiAttrs b = attrs(psi(om(), zero()));
  CHECK_FALSE(b.chain_to_s);
  CHECK(structural_eq(b.bigO, zero()));

  CHECK(structural_eq(p0_of(chain_step()), one()));
  CHECK_THROWS_AS((void)p0_of(psi(om(), zero())), DomainError);
}

TEST_CASE("M-class membership matches the order below the collapse") {
  // For values below S, membership is exactly "below rho".
  for (const Term& x : {zero(), om(), psi(om(), zero()), rho(1)}) {
    CAPTURE(print_term(x));
    CHECK(in_M(x, rho(2)) == lt(x, rho(2)));
  }
  CHECK_FALSE(in_M(rho(2), rho(1)));
  CHECK_FALSE(in_M(rho(1), rho(1)));
  CHECK_FALSE(in_M(add(rho(1), one()), rho(1)));
  // Above S the class keeps the atoms.
  CHECK(in_M(stable(), rho(1)));
  CHECK(in_M(lam(), rho(1)));
  CHECK_THROWS_AS((void)in_M(om(), psi(om(), zero())), DomainError);
}

TEST_CASE("collapsing into an M-class") {
  Term r = rho(1);
  // Identity below S.
  CHECK(structural_eq(collapse_to(psi(om(), zero()), r), psi(om(), zero())));
  CHECK(structural_eq(collapse_to(nat(5), r), nat(5)));
  // S maps to the collapse, L to the regular right above it.
  CHECK(structural_eq(collapse_to(stable(), r), r));
  CHECK(structural_eq(collapse_to(lam(), r), reg(r)));
  CHECK(structural_eq(collapse_to(theta(one(), w()), r),
                      theta(one(), w(), one(), reg(r))));
  CHECK(structural_eq(collapse_to(add(stable(), om()), r), add(r, om())));
  // Order is preserved among the images.
  CHECK(compare(collapse_to(stable(), r), collapse_to(lam(), r)) == Cmp::Less);
  CHECK(compare(collapse_to(add(stable(), one()), r),
                collapse_to(theta(one(), w()), r)) == Cmp::Less);
  // Preconditions.
  CHECK_THROWS_AS((void)collapse_to(om(), lam()), DomainError);
  CHECK_THROWS_AS((void)collapse_to(om(), psi(om(), zero())), DomainError);
  CHECK_THROWS_AS((void)collapse_to(rho(1), rho(1)), DomainError);
}
