#pragma once

// Verification harness: bounded enumeration of canonical terms, independent
// comparison oracles on classical fragments, randomized descending-chain
// stress, and the named property suite used by selftest.

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ot/order.hpp"
#include "ot/term.hpp"

namespace ot {

// ---- Enumeration ------------------------------------------------------------

enum class Generator { SumG, PhiG, RegG, PsiSG, PsiStepG, ThetaG };

const char* generator_name(Generator g);
std::optional<Generator> generator_from_name(std::string_view name);
std::vector<Generator> all_generators();

struct EnumSpec {
  std::uint32_t max_size = 4;
  std::optional<Term> below;     // keep only terms < below
  std::vector<Generator> gens;   // empty = all
};

// All canonical valid terms reachable from the atoms within the size budget,
// sorted ascending by compare; deterministic for a given spec.
std::vector<Term> enumerate_terms(const EnumSpec& spec);

// ---- Independent oracles ----------------------------------------------------
//
// Self-contained miniature ordinal arithmetics that share no code with
// compare(); used to cross-check it on embedded fragments.

// Cantor normal form ordinals below epsilon_0: sum of omega^e * k.
struct CnfOrd {
  std::vector<std::pair<CnfOrd, std::uint64_t>> monos;  // strictly descending e
  friend bool operator==(const CnfOrd&, const CnfOrd&) = default;
};
int cnf_cmp(const CnfOrd& a, const CnfOrd& b);
CnfOrd cnf_add(const CnfOrd& a, const CnfOrd& b);
CnfOrd cnf_omega_pow(const CnfOrd& e);
// Translates terms of the {0, +, phi(0,.), numerals} fragment; nullopt
// outside it.
std::optional<CnfOrd> to_cnf(const Term& t);

// Veblen normal form ordinals below Gamma_0: sums of phi_a(b) * k.
struct VebOrd {
  struct Mono {
    // phi_a(b) * k with phi_a(b) maximal (normal form).
    std::shared_ptr<const VebOrd> a, b;
    std::uint64_t k;
  };
  std::vector<Mono> monos;  // strictly descending
};
int veb_cmp(const VebOrd& a, const VebOrd& b);
VebOrd veb_add(const VebOrd& a, const VebOrd& b);
VebOrd veb_phi(const VebOrd& a, const VebOrd& b);
VebOrd veb_nat(std::uint64_t n);
std::optional<VebOrd> to_veb(const Term& t);

// Cross-check verdict on a pair of terms, when both lie in the fragment.
std::optional<Cmp> oracle_cnf_compare(const Term& x, const Term& y);
std::optional<Cmp> oracle_veblen_compare(const Term& x, const Term& y);

// ---- Descending-chain stress ------------------------------------------------

struct DescentReport {
  std::uint32_t chains = 0;
  std::uint32_t completed = 0;       // chains that reached 0 / a dead end
  std::uint32_t budget_exhausted = 0;
  std::uint64_t total_steps = 0;
  std::uint32_t longest_chain = 0;
  std::uint64_t o_checked = 0;       // step-down psi pairs with O compared
  std::uint64_t o_violations = 0;
  std::uint64_t compare_failures = 0;  // steps where the successor was not smaller
  std::vector<std::string> notes;
};

DescentReport descent_stress(const Term& start, std::uint32_t chains,
                             std::uint32_t step_budget, std::uint64_t seed);

// ---- Property suite ---------------------------------------------------------

struct PropertyResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::uint64_t skipped = 0;  // generated cases outside the property's domain
  std::vector<std::string> counterexamples;  // up to a few, printed terms
  bool undersampled = false;  // checked fell short of the requested budget
};

struct PropertyOptions {
  std::uint64_t seed = 2026;
  std::uint64_t budget = 400;  // target checks per property
  bool quick = false;
};

std::vector<PropertyResult> run_property_suite(const PropertyOptions& opts);

}  // namespace ot
