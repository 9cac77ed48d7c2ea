// otpi: command line front end for the OT(Pi^1_1) ordinal notation library.
//
// Subcommands: compare, normalize, validate, hull, closure, omeasure, attrs,
// collapse, enumerate, stress, selftest.  Terms are grammar strings or @file
// references; X-sets are newline-separated term files.  Exit codes: 0 on
// success, 1 on domain/validation failure, 2 on usage errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ot/finite_fn.hpp"
#include "ot/harness.hpp"
#include "ot/hull.hpp"
#include "ot/order.hpp"
#include "ot/textio.hpp"

using nlohmann::json;
using namespace ot;

namespace {

struct Config {
  std::string format = "text";
  std::uint64_t seed = 2026;
  std::uint64_t budget = 0;  // 0 = per-subcommand default
  unsigned jobs = 1;
  std::uint32_t max_size = 4;
  std::string below;
  std::string generators;
  std::string mutate;
  int verbosity = 0;
};

bool structured(const Config& c) { return c.format == "structured"; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string s) {
  auto sp = [](unsigned char c) { return std::isspace(c); };
  while (!s.empty() && sp(s.back())) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && sp(s[i])) ++i;
  return s.substr(i);
}

// A term argument: either a grammar string or @path to a file holding one.
Term read_term_arg(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] == '@') text = trim(slurp(arg.substr(1)));
  try {
    return parse_term(text);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n  " << text << "\n  "
              << std::string(e.offset, ' ')
              << std::string(std::max<std::size_t>(e.length, 1), '^') << "\n";
    throw DomainError("unparsable term argument");
  }
}

FiniteFn read_fn_arg(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] == '@') text = trim(slurp(arg.substr(1)));
  try {
    return parse_fnmap(text);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n  " << text << "\n  "
              << std::string(e.offset, ' ')
              << std::string(std::max<std::size_t>(e.length, 1), '^') << "\n";
    throw DomainError("unparsable function argument");
  }
}

std::vector<Term> read_term_file(const std::string& path) {
  std::istringstream in(slurp(path));
  std::vector<Term> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    try {
      out.push_back(parse_term(line));
    } catch (const ParseError& e) {
      std::cerr << path << ":" << lineno << ": parse error: " << e.what()
                << "\n";
      throw DomainError("unparsable term in " + path);
    }
  }
  return out;
}

void emit(const Config& cfg, const json& doc, const std::string& text) {
  if (structured(cfg))
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

int apply_mutation(const std::string& name) {
  if (name.empty()) return 0;
  ComparatorMutation m;
  if (name == "psi-hull-skip" || name == "1")
    m = ComparatorMutation::PsiCase2SkipHull;
  else if (name == "lex-drop-b" || name == "2")
    m = ComparatorMutation::LtLexDropCaseB;
  else if (name == "theta-iter-invert" || name == "3")
    m = ComparatorMutation::ThetaIterInverted;
  else {
    std::cerr << "unknown mutation: " << name
              << " (psi-hull-skip, lex-drop-b, theta-iter-invert)\n";
    return 2;
  }
  set_comparator_mutation(m);
  return 0;
}

// ---- subcommand bodies ------------------------------------------------------

int cmd_compare(const Config& cfg, const std::string& a, const std::string& b) {
  Term x = read_term_arg(a), y = read_term_arg(b);
  Cmp c = compare(x, y);
  const char* s = c == Cmp::Less ? "<" : c == Cmp::Equal ? "=" : ">";
  emit(cfg, json{{"op", "compare"}, {"result", s}}, s);
  return 0;
}

int cmd_normalize(const Config& cfg, const std::string& a) {
  Term t = read_term_arg(a);
  emit(cfg, json{{"op", "normalize"}, {"term", to_structured(t)}},
       print_term(t));
  return 0;
}

int cmd_validate(const Config& cfg, const std::string& a) {
  Term t = read_term_arg(a);
  ValidationReport r = validate_ot(t);
  json issues = json::array();
  std::string text = r.ok ? "ok" : "invalid";
  for (const auto& i : r.issues) {
    issues.push_back({{"where", to_structured(i.where)}, {"reason", i.reason}});
    text += "\n  " + i.reason + "  [" + print_term(i.where) + "]";
  }
  emit(cfg, json{{"op", "validate"}, {"ok", r.ok}, {"issues", issues}}, text);
  return r.ok ? 0 : 1;
}

int cmd_hull(const Config& cfg, const std::string& g, const std::string& a,
             const std::string& b) {
  bool in = in_hull(read_term_arg(g), read_term_arg(a), read_term_arg(b));
  emit(cfg, json{{"op", "hull"}, {"member", in}}, in ? "in" : "out");
  return 0;
}

int cmd_closure(const Config& cfg, const std::string& g, const std::string& a,
                const std::string& xfile) {
  std::vector<Term> X = read_term_file(xfile);
  bool in = in_closure(read_term_arg(g), read_term_arg(a), X);
  emit(cfg, json{{"op", "closure"}, {"member", in}}, in ? "in" : "out");
  return 0;
}

int cmd_omeasure(const Config& cfg, const std::string& f_arg,
                 const std::string& mu_arg) {
  FiniteFn f = read_fn_arg(f_arg);
  Term o = mu_arg.empty() ? o_measure(f)
                          : o_measure_mu(f, read_term_arg(mu_arg));
  emit(cfg, json{{"op", "omeasure"}, {"value", to_structured(o)}},
       print_term(o));
  return 0;
}

int cmd_attrs(const Config& cfg, const std::string& a) {
  Term t = read_term_arg(a);
  PsiAttrs at = attrs(t);
  json doc{{"op", "attrs"},
           {"m", fn_to_structured(at.m)},
           {"p0", to_structured(at.p0)},
           {"lambda", to_structured(at.lam)},
           {"O", to_structured(at.bigO)},
           {"chain_to_s", at.chain_to_s}};
  std::string text = "m: " + print_fnmap(at.m) + "\np0: " + print_term(at.p0) +
                     "\nLambda: " + print_term(at.lam) +
                     "\nO: " + print_term(at.bigO) +
                     "\nchain_to_s: " + (at.chain_to_s ? "yes" : "no");
  emit(cfg, doc, text);
  return 0;
}

int cmd_collapse(const Config& cfg, const std::string& a,
                 const std::string& rho) {
  Term t = collapse_to(read_term_arg(a), read_term_arg(rho));
  emit(cfg, json{{"op", "collapse"}, {"term", to_structured(t)}},
       print_term(t));
  return 0;
}

int cmd_enumerate(const Config& cfg) {
  EnumSpec spec;
  spec.max_size = cfg.max_size;
  if (!cfg.below.empty()) spec.below = read_term_arg(cfg.below);
  if (!cfg.generators.empty()) {
    std::istringstream in(cfg.generators);
    std::string name;
    while (std::getline(in, name, ',')) {
      name = trim(name);
      if (name.empty()) continue;
      auto g = generator_from_name(name);
      if (!g) {
        std::cerr << "unknown generator: " << name << "\n";
        return 2;
      }
      spec.gens.push_back(*g);
    }
  }
  std::vector<Term> terms = enumerate_terms(spec);
  if (structured(cfg)) {
    json arr = json::array();
    for (const Term& t : terms) arr.push_back(to_structured(t));
    std::cout << json{{"op", "enumerate"},
                      {"count", terms.size()},
                      {"terms", arr}}
                     .dump(2)
              << "\n";
  } else {
    for (const Term& t : terms) std::cout << print_term(t) << "\n";
  }
  if (cfg.verbosity > 0)
    std::cerr << terms.size() << " terms at size <= " << cfg.max_size << "\n";
  return 0;
}

int cmd_stress(const Config& cfg, const std::string& start_arg,
               std::uint32_t chains) {
  Term start = start_arg.empty()
                   ? psi(om(), mk_omega_tower(2, succ(lam())))
                   : read_term_arg(start_arg);
  std::uint32_t budget =
      cfg.budget ? static_cast<std::uint32_t>(cfg.budget) : 100000u;
  DescentReport r = descent_stress(start, chains, budget, cfg.seed);
  json doc{{"op", "stress"},
           {"start", to_structured(start)},
           {"chains", r.chains},
           {"completed", r.completed},
           {"budget_exhausted", r.budget_exhausted},
           {"total_steps", r.total_steps},
           {"longest_chain", r.longest_chain},
           {"o_checked", r.o_checked},
           {"o_violations", r.o_violations},
           {"compare_failures", r.compare_failures},
           {"notes", r.notes}};
  std::ostringstream text;
  text << "start: " << print_term(start) << "\n"
       << "chains=" << r.chains << " completed=" << r.completed
       << " budget_exhausted=" << r.budget_exhausted << "\n"
       << "total_steps=" << r.total_steps
       << " longest_chain=" << r.longest_chain << "\n"
       << "o_checked=" << r.o_checked << " o_violations=" << r.o_violations
       << " compare_failures=" << r.compare_failures;
  for (const std::string& n : r.notes) text << "\nnote: " << n;
  emit(cfg, doc, text.str());
  bool bad = r.budget_exhausted || r.o_violations || r.compare_failures;
  return bad ? 1 : 0;
}

int cmd_selftest(const Config& cfg, bool quick) {
  PropertyOptions opts;
  opts.seed = cfg.seed;
  if (cfg.budget) opts.budget = cfg.budget;
  opts.quick = quick;
  std::vector<PropertyResult> rs = run_property_suite(opts);
  std::uint64_t failures = 0;
  if (structured(cfg)) {
    json arr = json::array();
    for (const auto& r : rs) {
      failures += r.failures;
      arr.push_back({{"name", r.name},
                     {"checked", r.checked},
                     {"failures", r.failures},
                     {"skipped", r.skipped},
                     {"undersampled", r.undersampled},
                     {"counterexamples", r.counterexamples}});
    }
    std::cout << json{{"op", "selftest"},
                      {"properties", arr},
                      {"failures", failures}}
                     .dump(2)
              << "\n";
  } else {
    for (const auto& r : rs) {
      failures += r.failures;
      std::cout << (r.failures ? "FAIL " : "ok   ") << r.name
                << "  checked=" << r.checked << " failures=" << r.failures
                << " skipped=" << r.skipped
                << (r.undersampled ? "  UNDERSAMPLED" : "") << "\n";
      for (const std::string& c : r.counterexamples)
        std::cout << "       counterexample: " << c << "\n";
    }
    std::cout << (failures ? "selftest FAILED" : "selftest passed") << "\n";
  }
  return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"OT(Pi^1_1) ordinal notation toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Deterministic seed")
      ->capture_default_str();
  app.add_option("--budget", cfg.budget,
                 "Step/check budget (0 = subcommand default)");
  app.add_option("--jobs", cfg.jobs,
                 "Worker hint (current implementation is serial)");
  app.add_option("--max-size", cfg.max_size, "Enumeration size bound")
      ->capture_default_str();
  app.add_option("--below", cfg.below, "Enumerate only terms below this term");
  app.add_option("--generators", cfg.generators,
                 "Comma list: sum,phi,reg,psis,psistep,theta");
  app.add_flag("-v,--verbose", cfg.verbosity, "More diagnostics on stderr");
  app.add_option("--mutate", cfg.mutate,
                 "Seeded comparator mutation (selftest sanity)")
      ->group("");  // hidden

  std::string arg_a, arg_b, arg_c;
  std::uint32_t chains = 1000;
  bool quick = false;

  auto* c_compare = app.add_subcommand("compare", "Compare two terms");
  c_compare->add_option("A", arg_a, "First term")->required();
  c_compare->add_option("B", arg_b, "Second term")->required();

  auto* c_norm = app.add_subcommand("normalize", "Print the canonical form");
  c_norm->add_option("A", arg_a, "Term")->required();

  auto* c_val = app.add_subcommand("validate", "Check notation validity");
  c_val->add_option("A", arg_a, "Term")->required();

  auto* c_hull = app.add_subcommand("hull", "Membership gamma in H_a(beta)");
  c_hull->add_option("G", arg_a, "Candidate gamma")->required();
  c_hull->add_option("A", arg_b, "Stage a")->required();
  c_hull->add_option("B", arg_c, "Generator bound beta")->required();

  auto* c_clo = app.add_subcommand("closure", "Membership gamma in C^a(X)");
  c_clo->add_option("G", arg_a, "Candidate gamma")->required();
  c_clo->add_option("A", arg_b, "Cut a")->required();
  c_clo->add_option("X", arg_c, "File of newline-separated terms")->required();

  std::string mu_arg;
  auto* c_om = app.add_subcommand("omeasure", "o-measure of a finite function");
  c_om->add_option("F", arg_a, "Function map, e.g. \"{0: L}\"")->required();
  c_om->add_option("--mu", mu_arg, "Epsilon base (default L)");

  auto* c_attrs = app.add_subcommand("attrs", "Collapse attributes of a term");
  c_attrs->add_option("A", arg_a, "Term (Om, S, or a psi term)")->required();

  auto* c_col = app.add_subcommand("collapse", "Collapsing substitution A[RHO/S]");
  c_col->add_option("A", arg_a, "Term")->required();
  c_col->add_option("RHO", arg_b, "Chain psi term below S")->required();

  auto* c_enum = app.add_subcommand("enumerate", "All valid terms within a size bound");

  auto* c_stress = app.add_subcommand("stress", "Randomized descending chains");
  c_stress->add_option("--start", arg_a, "Starting term (default the omega_2(L+1) collapse)");
  c_stress->add_option("--chains", chains, "Number of chains")
      ->capture_default_str();

  auto* c_self = app.add_subcommand("selftest", "Run the property suite");
  c_self->add_flag("--quick", quick, "Smaller corpora and budgets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (int rc = apply_mutation(cfg.mutate)) return rc;

  try {
    if (c_compare->parsed()) return cmd_compare(cfg, arg_a, arg_b);
    if (c_norm->parsed()) return cmd_normalize(cfg, arg_a);
    if (c_val->parsed()) return cmd_validate(cfg, arg_a);
    if (c_hull->parsed()) return cmd_hull(cfg, arg_a, arg_b, arg_c);
    if (c_clo->parsed()) return cmd_closure(cfg, arg_a, arg_b, arg_c);
    if (c_om->parsed()) return cmd_omeasure(cfg, arg_a, mu_arg);
    if (c_attrs->parsed()) return cmd_attrs(cfg, arg_a);
    if (c_col->parsed()) return cmd_collapse(cfg, arg_a, arg_b);
    if (c_enum->parsed()) return cmd_enumerate(cfg);
    if (c_stress->parsed()) return cmd_stress(cfg, arg_a, chains);
    if (c_self->parsed()) return cmd_selftest(cfg, quick);
  } catch (const ComparatorDiagnostic& e) {
    std::cerr << "comparator diagnostic: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
