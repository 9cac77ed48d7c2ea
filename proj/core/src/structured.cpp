#include <string>

#include "ot/textio.hpp"

namespace ot {

using nlohmann::json;

json to_structured(const Term& t) {
  switch (t.kind()) {
    case Kind::Zero:
      return json{{"k", "zero"}};
    case Kind::Nat:
      return json{{"k", "nat"}, {"n", t.nat_value()}};
    case Kind::Om:
      return json{{"k", "om"}};
    case Kind::S:
      return json{{"k", "s"}};
    case Kind::Lam:
      return json{{"k", "lam"}};
    case Kind::Reg:
      return json{{"k", "reg"}, {"x", to_structured(t.reg_arg())}};
    case Kind::Sum: {
      json parts = json::array();
      for (const Term& p : t.sum_parts()) parts.push_back(to_structured(p));
      return json{{"k", "sum"}, {"parts", std::move(parts)}};
    }
    case Kind::Phi:
      return json{{"k", "phi"},
                  {"a", to_structured(t.phi_a())},
                  {"b", to_structured(t.phi_b())}};
    case Kind::Psi: {
      json j{{"k", "psi"},
             {"sub", to_structured(t.psi_sub())},
             {"idx", to_structured(t.psi_idx())}};
      if (!t.psi_fn().empty()) j["fn"] = fn_to_structured(t.psi_fn());
      return j;
    }
    case Kind::Theta: {
      json j{{"k", "th"},
             {"b", to_structured(t.theta_iter())},
             {"x", to_structured(t.theta_arg())}};
      const Term& coeff = t.theta_coeff();
      if (!(coeff.kind() == Kind::Nat && coeff.nat_value() == 1))
        j["a"] = to_structured(coeff);
      if (t.theta_base().kind() != Kind::Lam)
        j["mu"] = to_structured(t.theta_base());
      return j;
    }
  }
  throw DomainError("to_structured: unknown term kind");
}

json fn_to_structured(const FiniteFn& f) {
  json arr = json::array();
  for (const auto& e : f.entries())
    arr.push_back(json{{"key", to_structured(e.first)},
                       {"val", to_structured(e.second)}});
  return arr;
}

namespace {

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end())
    throw DomainError(std::string("structured: missing field '") + name + "'");
  return *it;
}

}  // namespace

Term from_structured(const json& j) {
  if (!j.is_object() || !j.contains("k") || !j["k"].is_string())
    throw DomainError("structured: node must be an object with a string 'k'");
  const std::string k = j["k"].get<std::string>();
  if (k == "zero") return zero();
  if (k == "nat") {
    const json& n = field(j, "n");
    if (!n.is_number_unsigned())
      throw DomainError("structured: 'n' must be an unsigned number");
    std::uint64_t v = n.get<std::uint64_t>();
    return v == 0 ? zero() : nat(v);
  }
  if (k == "om") return om();
  if (k == "s") return stable();
  if (k == "lam") return lam();
  if (k == "reg") return reg(from_structured(field(j, "x")));
  if (k == "sum") {
    const json& parts = field(j, "parts");
    if (!parts.is_array())
      throw DomainError("structured: 'parts' must be an array");
    std::vector<Term> ps;
    for (const json& p : parts) ps.push_back(from_structured(p));
    return sum_of(ps);
  }
  if (k == "phi")
    return phi(from_structured(field(j, "a")), from_structured(field(j, "b")));
  if (k == "psi") {
    FiniteFn fn;
    if (j.contains("fn")) fn = fn_from_structured(j["fn"]);
    return psi(from_structured(field(j, "sub")), fn,
               from_structured(field(j, "idx")));
  }
  if (k == "th") {
    Term coeff = j.contains("a") ? from_structured(j["a"]) : one();
    Term base = j.contains("mu") ? from_structured(j["mu"]) : lam();
    return theta(from_structured(field(j, "b")),
                 from_structured(field(j, "x")), coeff, base);
  }
  throw DomainError("structured: unknown tag '" + k + "'");
}

FiniteFn fn_from_structured(const json& j) {
  if (!j.is_array())
    throw DomainError("structured: function must be a key/value array");
  std::vector<FiniteFn::Entry> entries;
  for (const json& e : j)
    entries.emplace_back(from_structured(field(e, "key")),
                         from_structured(field(e, "val")));
  return FiniteFn::make(std::move(entries));
}

}  // namespace ot
