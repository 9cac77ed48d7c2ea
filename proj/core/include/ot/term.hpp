#pragma once

// Term algebra for an ordinal notation system OT(Pi^1_1) built around a
// stable ordinal S.  Atoms: 0, Om (the first uncountable regular, = 0^+),
// S (the stable ordinal), L (= S^+, the next admissible above S).  Formers:
// sums, binary Veblen phi, next-regular reg(.), collapsing psi_sub^f(idx),
// and base^xi iteration towers th_b(xi) ("theta-tilde") used by the L-normal
// forms of finite-function values and by the ordinal measures.
//
// Terms are immutable, shared, and canonical by construction: the smart
// constructors below perform all value-level identifications (CNF sum
// absorption, Veblen fixed points, omega-power/tower aliasing, numeral
// merging), so structural equality coincides with ordinal equality and
// compare() in order.hpp returns Equal exactly on identical trees.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ot {

class Term;
struct TermNode;

// Raised when an operation is applied outside its documented domain
// (e.g. decomposing a term with no L-normal form).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

enum class Kind : std::uint8_t {
  Zero,   // 0
  Nat,    // finite ordinal n >= 1
  Om,     // first uncountable regular; canonical form of reg(0)
  S,      // the stable ordinal
  Lam,    // S^+, least admissible above S; canonical form of th(1,1)
  Reg,    // reg(x): next regular above x, for x < S
  Sum,    // weakly decreasing sum of >= 2 monomial parts
  Phi,    // phi(a, b): binary Veblen over the full term domain
  Psi,    // psi(sub; idx) / psi(sub; idx; f): collapse below subscript
  Theta,  // th(iter, arg [; base]) * coeff: iter-fold base-exponential tower
};

class Term {
 public:
  Term() = default;  // empty handle; only zero() etc. make real terms
  explicit Term(std::shared_ptr<const TermNode> p) : p_(std::move(p)) {}

  bool valid_handle() const { return p_ != nullptr; }
  const TermNode& node() const { return *p_; }
  const TermNode* get() const { return p_.get(); }

  Kind kind() const;
  std::uint64_t nat_value() const;  // Nat only

  // Kid accessors; each checks the kind it is meaningful for.
  const std::vector<Term>& sum_parts() const;
  const Term& reg_arg() const;
  const Term& phi_a() const;
  const Term& phi_b() const;
  const Term& psi_sub() const;
  const Term& psi_idx() const;
  const class FiniteFn& psi_fn() const;
  const Term& theta_iter() const;
  const Term& theta_arg() const;
  const Term& theta_coeff() const;
  const Term& theta_base() const;

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  std::shared_ptr<const TermNode> p_;
};

// Finite function c |-> f(c): finitely many nonzero values, keys and values
// terms (values in the L-normal-form sublanguage).  Entries are kept sorted
// by strictly increasing key.
class FiniteFn {
 public:
  using Entry = std::pair<Term, Term>;

  FiniteFn() = default;
  // Sorts by key; zero values are dropped; duplicate keys are a DomainError.
  static FiniteFn make(std::vector<Entry> entries);

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  std::vector<Term> support() const;
  // f(c); zero() when c is not in the support.
  Term value(const Term& c) const;

  friend bool operator==(const FiniteFn& a, const FiniteFn& b);
  friend bool operator!=(const FiniteFn& a, const FiniteFn& b) { return !(a == b); }

 private:
  std::vector<Entry> entries_;
};

struct TermNode {
  Kind kind;
  std::uint64_t nat = 0;   // Kind::Nat
  std::vector<Term> kids;  // Reg:[x] Sum:parts Phi:[a,b] Psi:[sub,idx] Theta:[iter,arg,coeff,base]
  FiniteFn fn;             // Kind::Psi
};

// ---- Atoms and constructors -------------------------------------------------

Term zero();
Term one();                // nat(1); canonical form of phi(0,0) and th(1,0)
Term nat(std::uint64_t n);
Term om();                 // Om
Term stable();             // S
Term lam();                // L = S^+

// Next regular above x.  Canonicalizes to the regular floor: reg(0) = Om,
// reg(x) = Om for x < Om, and reg(x) = reg(r) for the largest regular-valued
// subterm r <= x otherwise.  reg(x) for x >= S is constructible but invalid.
Term reg(const Term& x);

// CNF sum with absorption and coefficient/numeral merging; sum({}) = 0.
Term sum_of(const std::vector<Term>& parts);
Term add(const Term& x, const Term& y);
// x + 1.
Term succ(const Term& x);
// Left subtraction: the unique g with y + g = x (requires y <= x).
Term sub_left(const Term& x, const Term& y);
// omega * x (left product); exact on the term domain.
Term omega_mult(const Term& x);
// Ordinal product x * y.  Total on the shapes reachable from the public
// operations; throws DomainError on unsupported exotic combinations.
Term mul(const Term& x, const Term& y);

// Binary Veblen phi(a, b) with fixed-point absorption; phi(0, x) for x with
// tower content canonicalizes into Theta form (omega^(L*xi) = L^xi).
Term phi(const Term& a, const Term& b);

// psi_sub(idx) with empty finite function, and the general form.
Term psi(const Term& sub, const Term& idx);
Term psi(const Term& sub, const FiniteFn& fn, const Term& idx);

// th_iter(arg) * coeff over the given base (default L).  The stored iterate
// is a single omega-power; composite iterates expand by th_{a+b} = th_b o th_a.
// Canonicalizations: th(1,0) = 1, th(1,1) = base, coeff 0 gives 0, coeff on
// th(1,0) gives the coefficient itself.
Term theta(const Term& iter, const Term& arg);
Term theta(const Term& iter, const Term& arg, const Term& coeff);
Term theta(const Term& iter, const Term& arg, const Term& coeff, const Term& base);

// omega-tower: mk_omega_tower(0, a) = a, mk_omega_tower(n+1, a) = phi(0, tower(n, a)).
Term mk_omega_tower(std::uint32_t height, const Term& a);

// ---- Structural helpers -----------------------------------------------------

bool structural_eq(const Term& a, const Term& b);
std::size_t term_hash(const Term& t);

struct TermHash {
  std::size_t operator()(const Term& t) const { return term_hash(t); }
};
struct TermEq {
  bool operator()(const Term& a, const Term& b) const { return structural_eq(a, b); }
};

// Node-count size used by enumeration budgets: atoms cost 1, Nat(n) costs
// n+1, sums cost the sum of their parts, defaulted theta fields (iter 1,
// coeff 1, base L) and zero finite-function keys are free.
std::uint64_t node_count(const Term& t);

// Additive parts view: Sum -> its parts, Zero -> {}, else {t}.
std::vector<Term> parts_of(const Term& t);
// Monomial view of a part: Nat(n) -> (1, n); theta monomials split off their
// coefficient; every other part is (itself, 1).
Term mono_base(const Term& part);
Term mono_coeff(const Term& part);
// Rebuild a monomial from base and coefficient.
Term mono_make(const Term& base, const Term& coeff);

// True for terms denoting additively principal ordinals (usable as single
// omega-power iterates).
bool is_principal(const Term& t);
// Atoms and formers whose values are strongly critical (closed under phi):
// Om, S, L, reg(.), psi-terms.
bool is_strongly_critical_atom(const Term& t);
// Epsilon-valued terms: strongly critical atoms, phi(a>=1, b), and formal
// transfinite-iterate theta terms.
bool is_epsilon_term(const Term& t);
// Regular-valued terms: Om, reg(.), and psi-terms whose subscript chain
// passes through S.
bool is_regular_term(const Term& t);
// Does the subscript chain of a psi term reach S (sub = S, or a psi with
// such a chain)?
bool chain_to_S(const Term& psi_term);

// True when some additive part of t is a tower monomial (base Lam/Theta, or
// an epsilon-valued phi), i.e. when omega^t has a Theta-form canonical name.
bool has_tower_part(const Term& t);

// All distinct subterms of t (including t), in first-visit order.
std::vector<Term> subterms(const Term& t);

// Least epsilon-valued term strictly above x, as a phi(1, .)-family term
// (or Lam-adjacent: the result is always of the form phi(1, z+1) with
// z >= S; x below S yields phi(1, S+1)).
Term least_eps_above(const Term& x);

}  // namespace ot
