#include <algorithm>
#include <unordered_set>

#include "ot/finite_fn.hpp"
#include "ot/harness.hpp"
#include "ot/hull.hpp"
#include "ot/lnf.hpp"

namespace ot {

const char* generator_name(Generator g) {
  switch (g) {
    case Generator::SumG: return "sum";
    case Generator::PhiG: return "phi";
    case Generator::RegG: return "reg";
    case Generator::PsiSG: return "psis";
    case Generator::PsiStepG: return "psistep";
    case Generator::ThetaG: return "theta";
  }
  return "?";
}

std::optional<Generator> generator_from_name(std::string_view name) {
  for (Generator g : all_generators())
    if (name == generator_name(g)) return g;
  return std::nullopt;
}

std::vector<Generator> all_generators() {
  return {Generator::SumG,  Generator::PhiG,     Generator::RegG,
          Generator::PsiSG, Generator::PsiStepG, Generator::ThetaG};
}

namespace {

struct Universe {
  std::uint32_t max_size;
  const std::optional<Term>* below;
  std::unordered_set<Term, TermHash, TermEq> seen;
  std::vector<Term> all;    // insertion order
  std::vector<Term> fresh;  // additions in the current round

  bool consider(const Term& t) {
    if (node_count(t) > max_size) return false;
    if (below->has_value() && compare(t, **below) != Cmp::Less) return false;
    if (!seen.insert(t).second) return false;
    if (!validate_ot(t).ok) {
      seen.erase(t);
      return false;
    }
    all.push_back(t);
    fresh.push_back(t);
    return true;
  }

  // Guarded candidate: constructor-level domain errors just skip it.
  template <typename F>
  void offer(F&& make) {
    try {
      Term t = make();
      consider(t);
    } catch (const DomainError&) {
    } catch (const ComparatorDiagnostic&) {
    }
  }
};

bool has_gen(const std::vector<Generator>& gens, Generator g) {
  return std::find(gens.begin(), gens.end(), g) != gens.end();
}

void run_pair_gens(Universe& u, const std::vector<Generator>& gens,
                   const std::vector<Term>& frontier,
                   const std::vector<Term>& snapshot) {
  bool do_sum = has_gen(gens, Generator::SumG);
  bool do_phi = has_gen(gens, Generator::PhiG);
  for (const Term& x : frontier) {
    for (const Term& y : snapshot) {
      if (do_sum) {
        u.offer([&] { return add(x, y); });
        u.offer([&] { return add(y, x); });
      }
      if (do_phi) {
        u.offer([&] { return phi(x, y); });
        u.offer([&] { return phi(y, x); });
      }
    }
  }
}

void run_unary_gens(Universe& u, const std::vector<Generator>& gens,
                    const std::vector<Term>& frontier) {
  bool do_reg = has_gen(gens, Generator::RegG);
  bool do_theta = has_gen(gens, Generator::ThetaG);
  for (const Term& x : frontier) {
    if (do_reg && compare(x, stable()) == Cmp::Less)
      u.offer([&] { return reg(x); });
    if (do_theta) u.offer([&] { return theta(one(), x); });
  }
}

// Collapses below S: psi(S; a; {c: xi}) over all budget-fitting triples
// from the snapshot.  The validator decides admissibility.
void run_psi_s(Universe& u, const std::vector<Term>& snapshot) {
  if (u.max_size < 4) return;
  std::uint32_t room = u.max_size - 2;  // psi node + the S subscript
  std::vector<Term> small;
  for (const Term& t : snapshot)
    if (node_count(t) + 1 <= room) small.push_back(t);

  for (const Term& val : small) {
    if (val.kind() == Kind::Zero) continue;
    if (!value_coeff_ok(val)) continue;
    std::uint64_t val_sz = node_count(val);
    for (const Term& key : small) {
      if (compare(key, lam()) != Cmp::Less) continue;
      std::uint64_t key_sz = key.kind() == Kind::Zero ? 0 : node_count(key);
      if (val_sz + key_sz + 1 > room) continue;
      FiniteFn fn;
      try {
        fn = FiniteFn::make({{key, val}});
      } catch (const DomainError&) {
        continue;
      }
      for (const Term& idx : small) {
        if (val_sz + key_sz + node_count(idx) > room) continue;
        u.offer([&] { return psi(stable(), fn, idx); });
      }
    }
  }
}

// Step-down collapses below existing chain psi terms: psi(pi; a; {d: v}).
void run_psi_step(Universe& u, const std::vector<Term>& snapshot) {
  std::vector<Term> chains;
  for (const Term& t : snapshot)
    if (t.kind() == Kind::Psi && chain_to_S(t)) chains.push_back(t);

  std::vector<Term> small;
  for (const Term& t : snapshot)
    if (node_count(t) <= u.max_size) small.push_back(t);

  for (const Term& pi : chains) {
    const FiniteFn& fpi = pi.psi_fn();
    std::uint64_t pi_sz = node_count(pi);
    if (pi_sz + 3 > u.max_size) continue;
    for (const auto& ce : fpi.entries()) {
      const Term& c = ce.first;
      std::vector<Term> cuts;
      cuts.push_back(zero());
      for (const Term& d : small)
        if (compare(d, c) == Cmp::Less && d.kind() != Kind::Zero)
          cuts.push_back(d);
      for (const Term& d : cuts) {
        std::uint64_t d_sz = d.kind() == Kind::Zero ? 0 : node_count(d);
        // g agrees with fpi below d and replaces everything from d up.
        FiniteFn lower = fn_below(fpi, d);
        for (const Term& v : small) {
          if (v.kind() == Kind::Zero) continue;
          if (pi_sz + 2 + d_sz + node_count(v) > u.max_size) continue;
          FiniteFn g;
          try {
            g = fn_set(lower, d, v);
          } catch (const DomainError&) {
            continue;
          }
          for (const Term& idx : small) {
            if (pi_sz + 1 + d_sz + node_count(v) + node_count(idx) >
                u.max_size)
              continue;
            u.offer([&] { return psi(pi, g, idx); });
          }
        }
      }
    }
  }
}

}  // namespace

std::vector<Term> enumerate_terms(const EnumSpec& spec) {
  std::vector<Generator> gens = spec.gens.empty() ? all_generators() : spec.gens;
  Universe u{spec.max_size, &spec.below, {}, {}, {}};

  for (const Term& seed : {zero(), om(), stable(), lam()}) u.consider(seed);

  while (true) {
    std::vector<Term> frontier = std::move(u.fresh);
    u.fresh.clear();
    if (frontier.empty()) break;
    std::vector<Term> snapshot = u.all;
    run_pair_gens(u, gens, frontier, snapshot);
    run_unary_gens(u, gens, frontier);
    if (has_gen(gens, Generator::PsiSG)) run_psi_s(u, snapshot);
    if (has_gen(gens, Generator::PsiStepG)) run_psi_step(u, snapshot);
  }

  std::vector<Term> out = u.all;
  std::sort(out.begin(), out.end(),
            [](const Term& a, const Term& b) { return lt(a, b); });
  return out;
}

}  // namespace ot
