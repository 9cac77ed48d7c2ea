#include <memory>

#include "ot/harness.hpp"

namespace ot {

// ---- Cantor normal form oracle ---------------------------------------------

int cnf_cmp(const CnfOrd& a, const CnfOrd& b) {
  std::size_t n = a.monos.size() < b.monos.size() ? a.monos.size()
                                                  : b.monos.size();
  for (std::size_t i = 0; i < n; ++i) {
    int e = cnf_cmp(a.monos[i].first, b.monos[i].first);
    if (e != 0) return e;
    if (a.monos[i].second != b.monos[i].second)
      return a.monos[i].second < b.monos[i].second ? -1 : 1;
  }
  if (a.monos.size() != b.monos.size())
    return a.monos.size() < b.monos.size() ? -1 : 1;
  return 0;
}

CnfOrd cnf_add(const CnfOrd& a, const CnfOrd& b) {
  if (b.monos.empty()) return a;
  CnfOrd r;
  const CnfOrd& he = b.monos.front().first;
  std::uint64_t hk = b.monos.front().second;
  for (const auto& m : a.monos) {
    int c = cnf_cmp(m.first, he);
    if (c > 0) {
      r.monos.push_back(m);
    } else if (c == 0) {
      hk += m.second;
      break;
    } else {
      break;  // absorbed
    }
  }
  r.monos.emplace_back(he, hk);
  r.monos.insert(r.monos.end(), b.monos.begin() + 1, b.monos.end());
  return r;
}

CnfOrd cnf_omega_pow(const CnfOrd& e) {
  CnfOrd r;
  r.monos.emplace_back(e, 1);
  return r;
}

std::optional<CnfOrd> to_cnf(const Term& t) {
  switch (t.kind()) {
    case Kind::Zero:
      return CnfOrd{};
    case Kind::Nat: {
      CnfOrd r;
      r.monos.emplace_back(CnfOrd{}, t.nat_value());
      return r;
    }
    case Kind::Sum: {
      CnfOrd acc;
      for (const Term& p : t.sum_parts()) {
        auto q = to_cnf(p);
        if (!q) return std::nullopt;
        acc = cnf_add(acc, *q);
      }
      return acc;
    }
    case Kind::Phi: {
      if (t.phi_a().kind() != Kind::Zero) return std::nullopt;
      auto e = to_cnf(t.phi_b());
      if (!e) return std::nullopt;
      return cnf_omega_pow(*e);
    }
    default:
      return std::nullopt;
  }
}

std::optional<Cmp> oracle_cnf_compare(const Term& x, const Term& y) {
  auto a = to_cnf(x);
  if (!a) return std::nullopt;
  auto b = to_cnf(y);
  if (!b) return std::nullopt;
  int c = cnf_cmp(*a, *b);
  return c < 0 ? Cmp::Less : c > 0 ? Cmp::Greater : Cmp::Equal;
}

// ---- Veblen normal form oracle ---------------------------------------------

namespace {

using VebPtr = std::shared_ptr<const VebOrd>;

VebPtr box(VebOrd v) { return std::make_shared<const VebOrd>(std::move(v)); }

VebOrd single(VebPtr a, VebPtr b, std::uint64_t k) {
  VebOrd r;
  r.monos.push_back({std::move(a), std::move(b), k});
  return r;
}

// Value comparison of phi_{a1}(b1) vs phi_{a2}(b2).
int phi_cmp(const VebPtr& a1, const VebPtr& b1, const VebPtr& a2,
            const VebPtr& b2) {
  int c = veb_cmp(*a1, *a2);
  if (c == 0) return veb_cmp(*b1, *b2);
  if (c < 0) {
    // lower level on the left: compare its argument with the whole right value
    int d = veb_cmp(*b1, single(a2, b2, 1));
    return d != 0 ? d : -1;  // equal argument means left sits at a fixed point
  }
  int d = veb_cmp(single(a1, b1, 1), *b2);
  return d != 0 ? d : 1;
}

}  // namespace

int veb_cmp(const VebOrd& a, const VebOrd& b) {
  std::size_t n = a.monos.size() < b.monos.size() ? a.monos.size()
                                                  : b.monos.size();
  for (std::size_t i = 0; i < n; ++i) {
    int c = phi_cmp(a.monos[i].a, a.monos[i].b, b.monos[i].a, b.monos[i].b);
    if (c != 0) return c;
    if (a.monos[i].k != b.monos[i].k) return a.monos[i].k < b.monos[i].k ? -1 : 1;
  }
  if (a.monos.size() != b.monos.size())
    return a.monos.size() < b.monos.size() ? -1 : 1;
  return 0;
}

VebOrd veb_add(const VebOrd& a, const VebOrd& b) {
  if (b.monos.empty()) return a;
  VebOrd r;
  VebOrd::Mono head = b.monos.front();
  for (const auto& m : a.monos) {
    int c = phi_cmp(m.a, m.b, head.a, head.b);
    if (c > 0) {
      r.monos.push_back(m);
    } else if (c == 0) {
      head.k += m.k;
      break;
    } else {
      break;
    }
  }
  r.monos.push_back(std::move(head));
  r.monos.insert(r.monos.end(), b.monos.begin() + 1, b.monos.end());
  return r;
}

VebOrd veb_phi(const VebOrd& a, const VebOrd& b) {
  // phi_a at a fixed point of a higher level collapses to its argument.
  if (b.monos.size() == 1 && b.monos.front().k == 1) {
    const auto& m = b.monos.front();
    if (veb_cmp(*m.a, a) > 0) return b;
  }
  return single(box(a), box(b), 1);
}

VebOrd veb_nat(std::uint64_t n) {
  if (n == 0) return VebOrd{};
  return single(box(VebOrd{}), box(VebOrd{}), n);
}

std::optional<VebOrd> to_veb(const Term& t) {
  switch (t.kind()) {
    case Kind::Zero:
      return VebOrd{};
    case Kind::Nat:
      return veb_nat(t.nat_value());
    case Kind::Sum: {
      VebOrd acc;
      for (const Term& p : t.sum_parts()) {
        auto q = to_veb(p);
        if (!q) return std::nullopt;
        acc = veb_add(acc, *q);
      }
      return acc;
    }
    case Kind::Phi: {
      auto a = to_veb(t.phi_a());
      if (!a) return std::nullopt;
      auto b = to_veb(t.phi_b());
      if (!b) return std::nullopt;
      return veb_phi(*a, *b);
    }
    default:
      return std::nullopt;
  }
}

std::optional<Cmp> oracle_veblen_compare(const Term& x, const Term& y) {
  auto a = to_veb(x);
  if (!a) return std::nullopt;
  auto b = to_veb(y);
  if (!b) return std::nullopt;
  int c = veb_cmp(*a, *b);
  return c < 0 ? Cmp::Less : c > 0 ? Cmp::Greater : Cmp::Equal;
}

}  // namespace ot
