// Acceptance gate for the library: each criterion prints one PASS/FAIL line
// and the process exits nonzero if any of them fail.  The checks are heavier
// than the unit tests and exercise the full enumerated corpus.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ot/finite_fn.hpp"
#include "ot/harness.hpp"
#include "ot/hull.hpp"
#include "ot/lnf.hpp"
#include "ot/order.hpp"
#include "ot/textio.hpp"

using namespace ot;

namespace {

using Rng = std::mt19937_64;
constexpr std::uint64_t kSeed = 2026;

Term w() { return phi(zero(), one()); }

std::vector<Term> g_corpus;  // size-limited full-generator universe, sorted

const std::vector<Term>& corpus() {
  if (g_corpus.empty()) {
    EnumSpec spec;
    spec.max_size = 6;
    g_corpus = enumerate_terms(spec);
  }
  return g_corpus;
}

// Random finite functions assembled from corpus material.
struct FnPool {
  std::vector<Term> keys;    // < L
  std::vector<Term> values;  // nonzero, coefficient-disciplined
  std::vector<FiniteFn> fns;

  explicit FnPool(Rng& rng, std::size_t target) {
    for (const Term& t : corpus()) {
      if (t.kind() != Kind::Zero && lt(t, lam())) keys.push_back(t);
      if (t.kind() != Kind::Zero && value_coeff_ok(t)) values.push_back(t);
    }
    while (fns.size() < target) {
      std::size_t n = 1 + rng() % 3;
      std::vector<FiniteFn::Entry> es;
      for (std::size_t i = 0; i < n; ++i)
        es.emplace_back(keys[rng() % keys.size()],
                        values[rng() % values.size()]);
      try {
        fns.push_back(FiniteFn::make(std::move(es)));
      } catch (const DomainError&) {
      }
    }
  }
};

Term mu_for(const FiniteFn& a, const FiniteFn& b) {
  Term top = max_term(max_sc_lambda(a), max_sc_lambda(b));
  return least_eps_above(max_term(stable(), top));
}

bool fail(std::string& why, std::string msg) {
  if (why.empty()) why = std::move(msg);
  return false;
}

// ---- 1: the corpus is totally ordered ---------------------------------------

bool crit_total_order(std::string& why) {
  auto t0 = std::chrono::steady_clock::now();
  const std::vector<Term>& ts = corpus();
  if (ts.size() < 3000)
    return fail(why, "corpus too small: " + std::to_string(ts.size()));
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i; j < ts.size(); ++j) {
      Cmp ab, ba;
      try {
        ab = compare(ts[i], ts[j]);
        ba = compare(ts[j], ts[i]);
      } catch (const ComparatorDiagnostic& e) {
        return fail(why, std::string("diagnostic: ") + e.what() + " on " +
                             print_term(ts[i]) + " / " + print_term(ts[j]));
      }
      bool eq = structural_eq(ts[i], ts[j]);
      if (eq != (ab == Cmp::Equal) || eq != (i == j))
        return fail(why, "equality mismatch at " + print_term(ts[i]) + " / " +
                             print_term(ts[j]));
      if (i != j && (ab != Cmp::Less || ba != Cmp::Greater))
        return fail(why, "order broken at " + print_term(ts[i]) + " / " +
                             print_term(ts[j]));
    }
  }
  Rng rng(kSeed);
  for (std::uint64_t n = 0; n < 1000000; ++n) {
    std::size_t i = rng() % ts.size();
    std::size_t j = rng() % ts.size();
    std::size_t k = rng() % ts.size();
    if (i > j) std::swap(i, j);
    if (j > k) std::swap(j, k);
    if (i > j) std::swap(i, j);
    if (i == j || j == k) continue;
    if (!(lt(ts[i], ts[j]) && lt(ts[j], ts[k]) && lt(ts[i], ts[k])))
      return fail(why, "transitivity broken in sampled triple");
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (secs > 300.0)
    return fail(why, "over the five-minute budget: " + std::to_string(secs));
  why = std::to_string(ts.size()) + " terms, all pairs + 1e6 triples";
  return true;
}

// ---- 2: agreement with the independent normal-form oracles ------------------

bool crit_oracles(std::string& why) {
  // The sum/phi sublanguage below epsilon_0 is exactly the oracle's Cantor
  // fragment, and below Om exactly the Veblen one; enumerate them directly.
  EnumSpec cnf_spec;
  cnf_spec.max_size = 7;
  cnf_spec.below = phi(one(), zero());
  cnf_spec.gens = {Generator::SumG, Generator::PhiG};
  std::vector<Term> cnf = enumerate_terms(cnf_spec);
  if (cnf.size() < 10) return fail(why, "cantor fragment too small");
  for (std::size_t i = 0; i < cnf.size(); ++i)
    for (std::size_t j = 0; j < cnf.size(); ++j) {
      auto o = oracle_cnf_compare(cnf[i], cnf[j]);
      if (!o)
        return fail(why, "cantor oracle cannot read " + print_term(cnf[i]) +
                             " vs " + print_term(cnf[j]));
      if (*o != compare(cnf[i], cnf[j]))
        return fail(why, "cantor oracle disagrees at " + print_term(cnf[i]) +
                             " vs " + print_term(cnf[j]));
    }

  EnumSpec veb_spec;
  veb_spec.max_size = 6;
  veb_spec.below = om();
  veb_spec.gens = {Generator::SumG, Generator::PhiG};
  std::vector<Term> veb = enumerate_terms(veb_spec);
  if (veb.size() < 10) return fail(why, "veblen fragment too small");
  for (std::size_t i = 0; i < veb.size(); ++i)
    for (std::size_t j = 0; j < veb.size(); ++j) {
      auto o = oracle_veblen_compare(veb[i], veb[j]);
      if (!o)
        return fail(why, "veblen oracle cannot read " + print_term(veb[i]) +
                             " vs " + print_term(veb[j]));
      if (*o != compare(veb[i], veb[j]))
        return fail(why, "veblen oracle disagrees at " + print_term(veb[i]) +
                             " vs " + print_term(veb[j]));
    }
  why = std::to_string(cnf.size()) + " cantor + " + std::to_string(veb.size()) +
        " veblen terms, all pairs";
  return true;
}

// ---- 3: the termination measures shrink under descent moves -----------------

bool crit_measures(std::string& why) {
  Rng rng(kSeed);
  FnPool pool(rng, 400);

  // Step-down pairs: replace everything from a cut d with one folded tower.
  std::uint64_t stepdowns = 0;
  for (std::size_t round = 0; stepdowns < 1000 && round < 200000; ++round) {
    const FiniteFn& fpi = pool.fns[rng() % pool.fns.size()];
    if (fpi.empty()) continue;
    Term c = fpi.entries().back().first;
    if (c.kind() == Kind::Zero) continue;
    std::vector<Term> cuts;
    cuts.push_back(zero());
    for (const auto& e : fpi.entries())
      if (lt(e.first, c)) cuts.push_back(e.first);
    Term d = cuts[rng() % cuts.size()];
    std::vector<Term> segs;
    try {
      segs = segments(fpi.value(c));
    } catch (const DomainError&) {
      continue;
    }
    const Term& seg = segs[rng() % segs.size()];
    if (seg.kind() == Kind::Zero) continue;
    FiniteFn g;
    Term o_g, o_f, om_g, om_f;
    try {
      g = fn_set(fn_below(fpi, d), d, theta(sub_left(c, d), seg));
      o_g = o_measure(g);
      o_f = o_measure(fpi);
      Term mu = mu_for(g, fpi);
      om_g = o_measure_mu(g, mu);
      om_f = o_measure_mu(fpi, mu);
    } catch (const DomainError&) {
      continue;
    }
    if (compare(o_g, o_f) != Cmp::Less)
      return fail(why, "o not descending for step-down from " +
                           print_fnmap(fpi) + " to " + print_fnmap(g));
    if (compare(om_g, om_f) != Cmp::Less)
      return fail(why, "o_mu not descending for step-down from " +
                           print_fnmap(fpi) + " to " + print_fnmap(g));
    ++stepdowns;
  }
  if (stepdowns < 1000) return fail(why, "too few step-down pairs generated");

  // Lowering moves: drop the top support point or shorten its value.
  std::uint64_t lowerings = 0;
  for (std::size_t round = 0; lowerings < 1000 && round < 200000; ++round) {
    const FiniteFn& g = pool.fns[rng() % pool.fns.size()];
    if (g.empty()) continue;
    Term top = g.entries().back().first;
    if (top.kind() == Kind::Zero) continue;
    FiniteFn f;
    try {
      if (rng() % 2 == 0) {
        f = fn_below(g, top);
      } else {
        std::vector<Term> segs = segments(g.value(top));
        f = fn_set(fn_below(g, top), top, segs[segs.size() - 2]);
      }
    } catch (const DomainError&) {
      continue;
    }
    if (f == g) continue;
    Term o_f, o_g, om_f, om_g;
    try {
      o_f = o_measure(f);
      o_g = o_measure(g);
      Term mu = mu_for(f, g);
      om_f = o_measure_mu(f, mu);
      om_g = o_measure_mu(g, mu);
    } catch (const DomainError&) {
      continue;
    }
    if (!lt_lex(f, g, zero()))
      return fail(why, "lowering move not lex-below: " + print_fnmap(f) +
                           " vs " + print_fnmap(g));
    if (compare(o_f, o_g) != Cmp::Less || compare(om_f, om_g) != Cmp::Less)
      return fail(why, "measure not descending for lowering move " +
                           print_fnmap(f) + " vs " + print_fnmap(g));
    ++lowerings;
  }
  if (lowerings < 1000) return fail(why, "too few lowering pairs generated");
  why = std::to_string(stepdowns) + " step-downs + " +
        std::to_string(lowerings) + " lowerings, o and o_mu strict";
  return true;
}

// ---- 4: pointwise bounds persist upward -------------------------------------

bool crit_bound_persistence(std::string& why) {
  Rng rng(kSeed);
  FnPool pool(rng, 300);
  const std::vector<Term>& ts = corpus();
  std::uint64_t checked = 0;
  for (std::size_t round = 0; checked < 1000 && round < 400000; ++round) {
    const FiniteFn& f = pool.fns[rng() % pool.fns.size()];
    Term c = rng() % 4 == 0 ? zero() : pool.keys[rng() % pool.keys.size()];
    const Term& xi = ts[rng() % ts.size()];
    const Term& zeta = ts[rng() % ts.size()];
    if (lt(zeta, xi)) continue;
    bool under_xi;
    try {
      under_xi = lt_under(f, c, xi);
      if (!under_xi) continue;
      if (!lt_under(f, c, zeta))
        return fail(why, "bound lost going from " + print_term(xi) + " to " +
                             print_term(zeta) + " for " + print_fnmap(f));
    } catch (const DomainError&) {
      continue;
    }
    ++checked;
  }
  if (checked < 1000) return fail(why, "too few persistence quadruples");
  why = std::to_string(checked) + " quadruples";
  return true;
}

// ---- 5: collapsing preserves order and the class boundary -------------------

bool crit_collapse(std::string& why) {
  Rng rng(kSeed);
  const std::vector<Term>& ts = corpus();
  std::uint64_t pairs = 0, spots = 0;
  for (std::uint32_t k = 1; k <= 20; ++k) {
    Term rho = psi(stable(), FiniteFn::make({{zero(), lam()}}), nat(k));
    if (!validate_ot(rho).ok) return fail(why, "collapse target invalid");
    std::vector<Term> members;
    for (const Term& t : ts) {
      if (members.size() >= 400) break;
      if (in_M(t, rho)) members.push_back(t);
    }
    if (members.size() < 30) return fail(why, "class pool too small");
    for (std::size_t n = 0; n < 500; ++n) {
      const Term& x = members[rng() % members.size()];
      const Term& y = members[rng() % members.size()];
      Term cx, cy;
      try {
        cx = collapse_to(x, rho);
        cy = collapse_to(y, rho);
      } catch (const DomainError& e) {
        return fail(why, std::string("collapse refused a member: ") + e.what());
      }
      if (compare(cx, cy) != compare(x, y))
        return fail(why, "order not preserved collapsing " + print_term(x) +
                             " and " + print_term(y));
      if (!validate_ot(cx).ok)
        return fail(why, "collapsed image invalid: " + print_term(cx));
      // Hull preservation: membership in H_x(z) must transfer to the images
      // whenever the generator bound lies above S (below S collapsing is the
      // identity and there is nothing to test).
      const Term& z = members[rng() % members.size()];
      if (lt(stable(), z)) {
        Term cz = collapse_to(z, rho);
        if (in_hull(y, x, z) != in_hull(cy, cx, cz))
          return fail(why, "hull membership not preserved for " +
                               print_term(y) + " in H_" + print_term(x) + "(" +
                               print_term(z) + ")");
      }
      ++pairs;
    }
    for (std::size_t n = 0; n < 100;) {
      const Term& x = ts[rng() % ts.size()];
      if (!lt(x, stable())) continue;  // boundary statement is about x < S
      if (in_M(x, rho) != lt(x, rho))
        return fail(why, "class boundary off at " + print_term(x) +
                             " for target " + print_term(rho));
      ++spots;
      ++n;
    }
  }
  why = std::to_string(pairs) + " pairs + " + std::to_string(spots) +
        " boundary checks over 20 targets";
  return true;
}

// ---- 6: long random descents terminate with shrinking measures --------------

bool crit_descent(std::string& why) {
  Term start = psi(om(), mk_omega_tower(2, succ(lam())));
  DescentReport rep = descent_stress(start, 1000, 100000, kSeed);
  if (rep.budget_exhausted || rep.o_violations || rep.compare_failures) {
    std::string note = rep.notes.empty() ? std::string() : rep.notes.front();
    return fail(why, "exhausted=" + std::to_string(rep.budget_exhausted) +
                         " o_violations=" + std::to_string(rep.o_violations) +
                         " compare_failures=" +
                         std::to_string(rep.compare_failures) + " " + note);
  }
  why = std::to_string(rep.chains) + " chains, longest " +
        std::to_string(rep.longest_chain) + ", " +
        std::to_string(rep.total_steps) + " steps, " +
        std::to_string(rep.o_checked) + " measure checks";
  return true;
}

// ---- 7: closure stages are anti-monotone and flat between stages ------------

bool crit_closure_laws(std::string& why) {
  Rng rng(kSeed);
  const std::vector<Term>& ts = corpus();
  std::vector<Term> countable;  // below Om, for the flat-window law
  for (const Term& t : ts)
    if (lt(t, om())) countable.push_back(t);

  std::uint64_t sets = 0, queries = 0;
  while (sets < 100) {
    std::vector<Term> X;
    std::size_t n = 1 + rng() % 4;
    for (std::size_t i = 0; i < n; ++i) X.push_back(ts[rng() % ts.size()]);
    bool grounded = true;
    for (const Term& gamma : X)
      if (!in_closure(gamma, gamma, X)) { grounded = false; break; }
    if (!grounded) continue;
    ++sets;
    for (std::size_t q = 0; q < 500; ++q) {
      const Term& gamma = ts[rng() % ts.size()];
      Term a = ts[rng() % ts.size()];
      Term b = ts[rng() % ts.size()];
      if (lt(b, a)) std::swap(a, b);
      // Lower cuts admit at least as much.
      if (in_closure(gamma, b, X) && !in_closure(gamma, a, X))
        return fail(why, "closure not anti-monotone at " + print_term(gamma));
      // Between a countable cut and Om nothing changes.
      const Term& ca = countable[rng() % countable.size()];
      const Term& cb = countable[rng() % countable.size()];
      if (!structural_eq(ca, cb) &&
          in_closure(gamma, ca, X) != in_closure(gamma, cb, X))
        return fail(why, "closure not flat below Om at " + print_term(gamma));
      queries += 2;
    }
  }
  why = "100 generator sets, " + std::to_string(queries) + " queries";
  return true;
}

// ---- 8: text and structured forms round-trip the corpus ---------------------

bool crit_roundtrip(std::string& why) {
  const std::vector<Term>& ts = corpus();
  for (const Term& t : ts) {
    try {
      if (!structural_eq(parse_term(print_term(t)), t))
        return fail(why, "text round-trip broke " + print_term(t));
      if (!structural_eq(from_structured(to_structured(t)), t))
        return fail(why, "structured round-trip broke " + print_term(t));
    } catch (const std::exception& e) {
      return fail(why,
                  "round-trip threw on " + print_term(t) + ": " + e.what());
    }
  }
  why = std::to_string(ts.size()) + " terms, both formats";
  return true;
}

// ---- 9: seeded comparator bugs are detected ---------------------------------

bool crit_mutations(std::string& why) {
  struct Reset {
    ~Reset() { set_comparator_mutation(ComparatorMutation::None); }
  };
  for (ComparatorMutation m :
       {ComparatorMutation::PsiCase2SkipHull, ComparatorMutation::LtLexDropCaseB,
        ComparatorMutation::ThetaIterInverted}) {
    Reset reset;
    set_comparator_mutation(m);
    bool detected = false;
    try {
      PropertyOptions opts;
      opts.seed = kSeed;
      opts.budget = 200;
      opts.quick = true;
      for (const PropertyResult& r : run_property_suite(opts))
        if (r.failures > 0) detected = true;
    } catch (const ComparatorDiagnostic&) {
      detected = true;
    } catch (const DomainError&) {
      detected = true;
    }
    set_comparator_mutation(ComparatorMutation::None);
    if (!detected)
      return fail(why, std::string("mutation not detected: ") +
                           std::to_string(static_cast<int>(m)));
  }
  why = "3 seeded bugs, each caught by the property suite";
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    bool (*run)(std::string&);
  };
  const Criterion criteria[] = {
      {"total-order", crit_total_order},
      {"oracle-agreement", crit_oracles},
      {"measure-descent", crit_measures},
      {"bound-persistence", crit_bound_persistence},
      {"collapse-class", crit_collapse},
      {"descent-stress", crit_descent},
      {"closure-laws", crit_closure_laws},
      {"format-roundtrip", crit_roundtrip},
      {"mutation-detection", crit_mutations},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string note;
    bool ok = false;
    try {
      ok = c.run(note);
    } catch (const std::exception& e) {
      note = std::string("unhandled exception: ") + e.what();
    }
    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t0).count();
    std::printf("%s %-18s (%6.1fs) %s\n", ok ? "PASS" : "FAIL", c.name, dt,
                note.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  if (failures) std::printf("%d criteria failed\n", failures);
  return failures ? 1 : 0;
}
