#include <cctype>
#include <string>

#include "ot/textio.hpp"

namespace ot {

namespace {

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct Parser {
  std::string_view s;
  std::size_t pos = 0;

  [[noreturn]] void err(const std::string& what, std::size_t at,
                        std::size_t len = 1) {
    throw ParseError(what + " at offset " + std::to_string(at), at, len);
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  bool try_tok(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect_tok(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      err(std::string("expected '") + c + "'", pos);
    ++pos;
  }

  bool try_kw(std::string_view kw) {
    skip_ws();
    if (s.compare(pos, kw.size(), kw) != 0) return false;
    std::size_t after = pos + kw.size();
    if (after < s.size() && ident_char(s[after])) return false;
    pos = after;
    return true;
  }

  std::uint64_t number() {
    skip_ws();
    std::size_t start = pos;
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::uint64_t d = static_cast<std::uint64_t>(s[pos] - '0');
      if (v > (UINT64_MAX - d) / 10)
        err("numeral too large", start, pos - start + 1);
      v = v * 10 + d;
      ++pos;
    }
    if (pos == start) err("expected a numeral", start);
    return v;
  }

  Term term() {
    Term acc = part();
    while (try_tok('+')) acc = add(acc, part());
    return acc;
  }

  Term part() {
    Term acc = atom();
    while (try_tok('*')) acc = mul(acc, atom());
    return acc;
  }

  FiniteFn fnmap() {
    expect_tok('{');
    std::vector<FiniteFn::Entry> entries;
    if (!try_tok('}')) {
      do {
        Term k = term();
        expect_tok(':');
        Term v = term();
        entries.emplace_back(std::move(k), std::move(v));
      } while (try_tok(','));
      expect_tok('}');
    }
    return FiniteFn::make(std::move(entries));
  }

  Term atom() {
    skip_ws();
    if (pos >= s.size()) err("unexpected end of input", pos);
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t n = number();
      return n == 0 ? zero() : nat(n);
    }
    if (c == '(') {
      ++pos;
      Term t = term();
      expect_tok(')');
      return t;
    }
    if (try_kw("Om")) return om();
    if (try_kw("S")) return stable();
    if (try_kw("L")) return lam();
    if (try_kw("phi")) {
      expect_tok('(');
      Term a = term();
      expect_tok(',');
      Term b = term();
      expect_tok(')');
      return phi(a, b);
    }
    if (try_kw("reg")) {
      expect_tok('(');
      Term x = term();
      expect_tok(')');
      return reg(x);
    }
    if (try_kw("psi")) {
      expect_tok('(');
      Term sub = term();
      expect_tok(';');
      Term idx = term();
      FiniteFn fn;
      if (try_tok(';')) fn = fnmap();
      expect_tok(')');
      return psi(sub, fn, idx);
    }
    if (try_kw("th")) {
      expect_tok('(');
      Term iter = term();
      expect_tok(',');
      Term arg = term();
      Term base = lam();
      if (try_tok(';')) base = term();
      expect_tok(')');
      return theta(iter, arg, one(), base);
    }
    err("expected a term", pos);
  }
};

}  // namespace

Term parse_term(std::string_view text) {
  Parser p{text};
  Term t = p.term();
  if (!p.at_end()) p.err("trailing input after term", p.pos);
  return t;
}

FiniteFn parse_fnmap(std::string_view text) {
  Parser p{text};
  FiniteFn f = p.fnmap();
  if (!p.at_end()) p.err("trailing input after map", p.pos);
  return f;
}

}  // namespace ot
