#pragma once

// Text grammar and structured (JSON) serialization.
//
//   term    := part ('+' part)*
//   part    := atom ('*' atom)*                 '*' is ordinal product
//   atom    := '0' | 'Om' | 'S' | 'L' | numeral
//            | 'phi' '(' term ',' term ')'
//            | 'reg' '(' term ')'
//            | 'psi' '(' term ';' term [';' fnmap] ')'        sub; idx; f
//            | 'th' '(' term ',' term [';' term] ')'          iter, arg; base
//            | '(' term ')'
//   fnmap   := '{' [entry (',' entry)*] '}'
//   entry   := term ':' term
//
// Whitespace is free between tokens.  Printing emits canonical forms and
// omits defaulted theta fields (coefficient 1, base L) and empty psi maps;
// parse(print(t)) == t on canonical terms.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ot/term.hpp"

#include "json.hpp"

namespace ot {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t offset, std::size_t length)
      : std::runtime_error(what), offset(offset), length(length) {}
  std::size_t offset;  // byte position of the offending token
  std::size_t length;  // its extent (>= 1)
};

Term parse_term(std::string_view text);
FiniteFn parse_fnmap(std::string_view text);

std::string print_term(const Term& t);
std::string print_fnmap(const FiniteFn& f);

// Structured form: {"k": tag, ...} with tags zero/nat/om/s/lam/reg/sum/phi/
// psi/th; psi maps are ordered key/value arrays, theta carries optional
// "a" (coefficient) and "mu" (base) fields.
nlohmann::json to_structured(const Term& t);
Term from_structured(const nlohmann::json& j);
nlohmann::json fn_to_structured(const FiniteFn& f);
FiniteFn fn_from_structured(const nlohmann::json& j);

}  // namespace ot
