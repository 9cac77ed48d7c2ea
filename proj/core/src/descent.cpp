#include <random>

#include "ot/finite_fn.hpp"
#include "ot/harness.hpp"
#include "ot/hull.hpp"
#include "ot/lnf.hpp"
#include "ot/textio.hpp"

namespace ot {

namespace {

using Rng = std::mt19937_64;

void push(std::vector<Term>& out, const Term& t) { out.push_back(t); }

// Candidate strictly-smaller successors of t.  Proposals may be wrong or
// invalid; the step loop filters them through validate_ot and compare.
void propose(const Term& t, Rng& rng, std::vector<Term>& out) {
  switch (t.kind()) {
    case Kind::Zero:
      return;
    case Kind::Nat: {
      std::uint64_t n = t.nat_value();
      push(out, n == 1 ? zero() : nat(n - 1));
      if (n > 2) push(out, nat(n / 2));
      return;
    }
    case Kind::Om:
      push(out, psi(om(), zero()));
      push(out, psi(om(), om()));
      push(out, nat(1 + rng() % 9));
      push(out, zero());
      return;
    case Kind::S:
      push(out, psi(stable(), FiniteFn::make({{zero(), lam()}}), one()));
      push(out, psi(stable(), FiniteFn::make({{one(), lam()}}), one()));
      push(out, om());
      return;
    case Kind::Lam:
      push(out, psi(lam(), zero()));
      push(out, psi(lam(), stable()));
      push(out, stable());
      return;
    case Kind::Reg:
      push(out, t.reg_arg());
      push(out, om());
      return;
    case Kind::Sum: {
      const auto& parts = t.sum_parts();
      std::vector<Term> prefix(parts.begin(), parts.end() - 1);
      push(out, sum_of(prefix));
      std::vector<Term> last_cands;
      propose(parts.back(), rng, last_cands);
      for (const Term& c : last_cands) {
        std::vector<Term> ps = prefix;
        ps.push_back(c);
        push(out, sum_of(ps));
      }
      push(out, parts.front());
      return;
    }
    case Kind::Phi: {
      push(out, t.phi_b());
      push(out, t.phi_a());
      std::vector<Term> sub;
      propose(t.phi_b(), rng, sub);
      for (const Term& c : sub) push(out, phi(t.phi_a(), c));
      sub.clear();
      propose(t.phi_a(), rng, sub);
      for (const Term& c : sub) push(out, phi(c, t.phi_b()));
      push(out, nat(1 + rng() % 40));
      return;
    }
    case Kind::Theta: {
      push(out, t.theta_arg());
      push(out, t.theta_base());
      std::vector<Term> sub;
      propose(t.theta_arg(), rng, sub);
      for (const Term& c : sub)
        push(out, theta(t.theta_iter(), c, t.theta_coeff(), t.theta_base()));
      sub.clear();
      propose(t.theta_coeff(), rng, sub);
      for (const Term& c : sub)
        push(out, theta(t.theta_iter(), t.theta_arg(), c, t.theta_base()));
      sub.clear();
      propose(t.theta_iter(), rng, sub);
      for (const Term& c : sub)
        push(out, theta(c, t.theta_arg(), t.theta_coeff(), t.theta_base()));
      push(out, nat(1 + rng() % 40));
      return;
    }
    case Kind::Psi: {
      const Term& sub = t.psi_sub();
      const Term& idx = t.psi_idx();
      const FiniteFn& fn = t.psi_fn();
      // Lower the index.
      std::vector<Term> idx_cands;
      propose(idx, rng, idx_cands);
      for (const Term& c : idx_cands) push(out, psi(sub, fn, c));
      // Shrink the function: drop the top key, or truncate its value to a
      // shorter segment.
      if (!fn.empty()) {
        const Term& top = fn.entries().back().first;
        push(out, psi(sub, fn_below(fn, top), idx));
        try {
          for (const Term& seg : segments(fn.value(top)))
            if (seg.kind() != Kind::Zero &&
                !structural_eq(seg, fn.value(top)))
              push(out, psi(sub, fn_set(fn, top, seg), idx));
        } catch (const DomainError&) {
        }
      }
      // Dive one level deeper: a step-down collapse below t itself.
      if (chain_to_S(t) && !fn.empty()) {
        const Term& c = fn.entries().back().first;
        Term val = fn.entries().back().second;
        std::vector<Term> ds;
        ds.push_back(zero());
        if (c.kind() != Kind::Zero) {
          for (const auto& e : fn.entries())
            if (compare(e.first, c) == Cmp::Less) ds.push_back(e.first);
        }
        for (const Term& d : ds) {
          if (compare(d, c) != Cmp::Less) continue;
          try {
            Term gap = sub_left(c, d);
            for (const Term& seg : segments(val)) {
              if (seg.kind() == Kind::Zero) continue;
              Term v = theta(gap, seg);
              FiniteFn g = fn_set(fn_below(fn, d), d, v);
              push(out, psi(t, g, succ(idx)));
              push(out, psi(t, g, succ(succ(idx))));
            }
          } catch (const DomainError&) {
          }
        }
        push(out, psi(t, FiniteFn(), succ(idx)));
      }
      push(out, zero());
      push(out, nat(1 + rng() % 9));
      return;
    }
  }
}

}  // namespace

DescentReport descent_stress(const Term& start, std::uint32_t chains,
                             std::uint32_t step_budget, std::uint64_t seed) {
  DescentReport rep;
  rep.chains = chains;
  Rng rng(seed);

  for (std::uint32_t ci = 0; ci < chains; ++ci) {
    Term cur = start;
    std::uint32_t length = 0;
    bool done = false;
    for (std::uint32_t step = 0; step < step_budget; ++step) {
      if (cur.kind() == Kind::Zero) {
        done = true;
        break;
      }
      std::vector<Term> cands;
      propose(cur, rng, cands);
      // Random order, first acceptable candidate wins.
      for (std::size_t i = cands.size(); i > 1; --i) {
        std::size_t j = rng() % i;
        std::swap(cands[i - 1], cands[j]);
      }
      bool stepped = false;
      for (const Term& cand : cands) {
        // The comparator is only contracted on validated terms, so filter
        // before comparing; diagnostics on valid pairs are real failures.
        if (!validate_ot(cand).ok) continue;
        bool smaller;
        try {
          smaller = compare(cand, cur) == Cmp::Less;
          if (smaller && compare(cur, cand) != Cmp::Greater) {
            ++rep.compare_failures;
            if (rep.notes.size() < 8)
              rep.notes.push_back("asymmetric pair: " + print_term(cand) +
                                  " vs " + print_term(cur));
            continue;
          }
        } catch (const ComparatorDiagnostic& e) {
          ++rep.compare_failures;
          if (rep.notes.size() < 8)
            rep.notes.push_back(std::string("diagnostic: ") + e.what());
          continue;
        }
        if (!smaller) continue;
        // Step-down pair: a fresh collapse below a chain psi must shrink
        // the O-measure.
        if (cand.kind() == Kind::Psi && cand.psi_sub().kind() == Kind::Psi &&
            chain_to_S(cand)) {
          try {
            Term o_child = attrs(cand).bigO;
            Term o_parent = attrs(cand.psi_sub()).bigO;
            ++rep.o_checked;
            if (compare(o_child, o_parent) != Cmp::Less) {
              ++rep.o_violations;
              if (rep.notes.size() < 8)
                rep.notes.push_back("O not decreasing at " + print_term(cand));
            }
          } catch (const DomainError&) {
          } catch (const ComparatorDiagnostic&) {
            ++rep.o_violations;
          }
        }
        cur = cand;
        stepped = true;
        break;
      }
      if (!stepped) {
        // No acceptable successor; treat as a completed (dead-end) chain.
        done = true;
        break;
      }
      ++length;
      ++rep.total_steps;
    }
    if (cur.kind() == Kind::Zero || done) {
      ++rep.completed;
    } else {
      ++rep.budget_exhausted;
    }
    if (length > rep.longest_chain) rep.longest_chain = length;
  }
  return rep;
}

}  // namespace ot
