#include <string>

#include "ot/textio.hpp"

namespace ot {

namespace {

bool is_one_term(const Term& t) {
  return t.kind() == Kind::Nat && t.nat_value() == 1;
}

void emit(const Term& t, std::string& out);

// A coefficient suffix: atoms print bare, composite values parenthesized so
// '*' keeps its tight binding on re-parse.
void emit_factor(const Term& t, std::string& out) {
  if (t.kind() == Kind::Sum) {
    out += '(';
    emit(t, out);
    out += ')';
  } else {
    emit(t, out);
  }
}

void emit(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Kind::Zero:
      out += '0';
      return;
    case Kind::Nat:
      out += std::to_string(t.nat_value());
      return;
    case Kind::Om:
      out += "Om";
      return;
    case Kind::S:
      out += 'S';
      return;
    case Kind::Lam:
      out += 'L';
      return;
    case Kind::Reg:
      out += "reg(";
      emit(t.reg_arg(), out);
      out += ')';
      return;
    case Kind::Sum: {
      bool first = true;
      for (const Term& p : t.sum_parts()) {
        if (!first) out += " + ";
        first = false;
        emit(p, out);
      }
      return;
    }
    case Kind::Phi:
      out += "phi(";
      emit(t.phi_a(), out);
      out += ", ";
      emit(t.phi_b(), out);
      out += ')';
      return;
    case Kind::Psi:
      out += "psi(";
      emit(t.psi_sub(), out);
      out += "; ";
      emit(t.psi_idx(), out);
      if (!t.psi_fn().empty()) {
        out += "; ";
        out += print_fnmap(t.psi_fn());
      }
      out += ')';
      return;
    case Kind::Theta: {
      const Term& base = t.theta_base();
      const Term& coeff = t.theta_coeff();
      // First-power towers of the base print as the base times a coefficient.
      if (is_one_term(t.theta_iter()) && is_one_term(t.theta_arg())) {
        emit(base, out);
        if (!is_one_term(coeff)) {
          out += '*';
          emit_factor(coeff, out);
        }
        return;
      }
      out += "th(";
      emit(t.theta_iter(), out);
      out += ", ";
      emit(t.theta_arg(), out);
      if (base.kind() != Kind::Lam) {
        out += "; ";
        emit(base, out);
      }
      out += ')';
      if (!is_one_term(coeff)) {
        out += '*';
        emit_factor(coeff, out);
      }
      return;
    }
  }
}

}  // namespace

std::string print_term(const Term& t) {
  std::string out;
  emit(t, out);
  return out;
}

std::string print_fnmap(const FiniteFn& f) {
  std::string out = "{";
  bool first = true;
  for (const auto& e : f.entries()) {
    if (!first) out += ", ";
    first = false;
    emit(e.first, out);
    out += ": ";
    emit(e.second, out);
  }
  out += '}';
  return out;
}

}  // namespace ot
