#include "doctest.h"

#include <vector>

#include "ot/finite_fn.hpp"
#include "ot/lnf.hpp"
#include "ot/order.hpp"

using namespace ot;

namespace {

Term w() { return phi(zero(), one()); }

// ps_S^{{0 -> L}}(k): the canonical stable collapses used by the chain tests.
Term rho(std::uint32_t k) {
  return psi(stable(), FiniteFn::make({{zero(), lam()}}), nat(k));
}

struct MutationGuard {
  ~MutationGuard() { set_comparator_mutation(ComparatorMutation::None); }
};

}  // namespace

TEST_CASE("a spine of strictly increasing values") {
  std::vector<Term> chain = {
      zero(),
      one(),
      nat(2),
      w(),
      add(w(), one()),
      mul(w(), nat(2)),
      phi(zero(), nat(2)),
      phi(one(), zero()),
      phi(nat(2), zero()),
      psi(om(), zero()),
      psi(om(), psi(om(), zero())),
      psi(om(), om()),
      psi(om(), mul(om(), nat(2))),
      om(),
      phi(one(), succ(om())),
      rho(1),
      reg(rho(1)),
      theta(one(), w(), one(), reg(rho(1))),
      rho(2),
      stable(),
      phi(one(), succ(stable())),
      lam(),
      mul(lam(), nat(2)),
      theta(one(), w()),
      theta(w(), w()),
      theta(om(), one()),
  };
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = 0; j < chain.size(); ++j) {
      Cmp c = compare(chain[i], chain[j]);
      CAPTURE(i);
      CAPTURE(j);
      CHECK(c == (i < j ? Cmp::Less : i > j ? Cmp::Greater : Cmp::Equal));
    }
}

TEST_CASE("equality is structural only") {
  CHECK(compare(lam(), theta(one(), one())) == Cmp::Equal);  // same node
  CHECK(compare(add(om(), om()), mul(om(), nat(2))) == Cmp::Equal);
  CHECK(lt(zero(), one()));
  CHECK(leq(om(), om()));
  CHECK(structural_eq(max_term(om(), stable()), stable()));
}

TEST_CASE("sum comparison is run-grouped lexicographic") {
  CHECK(compare(add(om(), one()), add(om(), nat(2))) == Cmp::Less);
  CHECK(compare(add(om(), nat(3)), mul(om(), nat(2))) == Cmp::Less);
  CHECK(compare(add(stable(), om()), add(stable(), add(om(), one()))) ==
        Cmp::Less);
  CHECK(compare(add(lam(), om()), lam()) == Cmp::Greater);
}

TEST_CASE("pointwise bound f <^c xi") {
  FiniteFn f = FiniteFn::make({{one(), lam()}});
  CHECK(lt_under(f, zero(), theta(one(), succ(lam()))));
  CHECK_FALSE(lt_under(f, zero(), lam()));
  // Above all of the support the bound is vacuous.
  CHECK(lt_under(f, nat(2), one()));
  CHECK(lt_under(FiniteFn{}, zero(), zero()));
  // Persistence: enlarging the bound keeps it true.
  CHECK(lt_under(f, zero(), theta(one(), succ(lam()), nat(2))));
  CHECK(lt_under(f, zero(), theta(one(), mul(lam(), nat(2)))));
  // Peeling the gap off th(1, phi(0, 1)) leaves only phi(0, 1) at key 1.
  CHECK_FALSE(lt_under(f, zero(), theta(one(), w())));
}

TEST_CASE("irreducibility folds the top support pair") {
  CHECK(is_irreducible(FiniteFn{}));
  CHECK(is_irreducible(FiniteFn::make({{zero(), mul(lam(), nat(2))}})));
  CHECK_FALSE(is_irreducible(FiniteFn::make({{zero(), lam()}, {one(), lam()}})));
  FiniteFn good = FiniteFn::make(
      {{zero(), add(theta(one(), w()), theta(one(), nat(2)))}, {one(), one()}});
  CHECK(is_irreducible(good));
}

TEST_CASE("lexicographic comparison of finite functions") {
  FiniteFn f = FiniteFn::make({{zero(), mul(lam(), nat(2))}});
  FiniteFn g = FiniteFn::make({{zero(), lam()}, {one(), lam()}});
  // Larger at key 0, but g reaches back from key 1: f still sorts below.
  CHECK(lt_lex(f, g, zero()));
  CHECK_FALSE(lt_lex(g, f, zero()));

  FiniteFn a = FiniteFn::make({{zero(), lam()}});
  CHECK(lt_lex(a, f, zero()));       // smaller at the first difference
  CHECK_FALSE(lt_lex(f, a, zero())); // no reach-back available
  CHECK_FALSE(lt_lex(f, f, zero()));
  CHECK(lt_lex(FiniteFn{}, a, zero()));
  // From a base above every key both restrictions are empty.
  CHECK_FALSE(lt_lex(a, f, nat(5)));
}

TEST_CASE("mutation: inverted theta iterate comparison is caught") {
  Term x = theta(one(), w());
  Term y = theta(w(), w());
  REQUIRE(compare(x, y) == Cmp::Less);
  MutationGuard guard;
  set_comparator_mutation(ComparatorMutation::ThetaIterInverted);
  CHECK(compare(x, y) == Cmp::Greater);
}

TEST_CASE("mutation: dropped lex clause (b) is caught") {
  FiniteFn f = FiniteFn::make({{zero(), mul(lam(), nat(2))}});
  FiniteFn g = FiniteFn::make({{zero(), lam()}, {one(), lam()}});
  REQUIRE(lt_lex(f, g, zero()));
  MutationGuard guard;
  set_comparator_mutation(ComparatorMutation::LtLexDropCaseB);
  CHECK_FALSE(lt_lex(f, g, zero()));
}

TEST_CASE("mutation: skipped psi hull condition trips the diagnostic") {
  Term r0 = psi(stable(), FiniteFn::make({{zero(), lam()}}), mul(lam(), nat(2)));
  Term nested = psi(stable(), FiniteFn::make({{zero(), lam()}}), r0);
  REQUIRE(compare(nested, r0) == Cmp::Greater);
  REQUIRE(compare(r0, nested) == Cmp::Less);
  MutationGuard guard;
  set_comparator_mutation(ComparatorMutation::PsiCase2SkipHull);
  CHECK_THROWS_AS((void)compare(nested, r0), ComparatorDiagnostic);
}
