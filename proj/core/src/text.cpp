#include "wtdem/text.hpp"

#include <cctype>
#include <cstdlib>

#include "wtdem/error.hpp"

namespace wtdem {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
  }

  void expect(char c) {
    if (done() || peek() != c)
      throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  }

  std::int64_t integer(bool require_sign) {
    std::size_t start = pos;
    std::int64_t sign = 1;
    if (!done() && (peek() == '+' || peek() == '-')) {
      if (peek() == '-') sign = -1;
      ++pos;
    } else if (require_sign) {
      throw ParseError("expected '+' or '-'", pos);
    }
    if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected integer", start);
    std::int64_t value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      ++pos;
    }
    return sign * value;
  }
};

// One word token starting at the cursor: s0, s1, e, or t[<int>].
WeylElt word_token(Cursor& c) {
  std::size_t start = c.pos;
  char ch = c.peek();
  if (ch == 's') {
    ++c.pos;
    if (!c.done() && (c.peek() == '0' || c.peek() == '1')) {
      int i = c.peek() - '0';
      ++c.pos;
      return simple_reflection(i);
    }
    throw ParseError("expected s0 or s1", start);
  }
  if (ch == 'e') {
    ++c.pos;
    return weyl_e();
  }
  if (ch == 't') {
    ++c.pos;
    c.expect('[');
    std::int64_t t = c.integer(false);
    c.expect(']');
    return weyl_tau(t);
  }
  throw ParseError("expected word letter", start);
}

bool at_coweight_block(const Cursor& c) {
  return c.peek() == 'e' && c.pos + 1 < c.text.size() && c.text[c.pos + 1] == '[';
}

Coweight coweight_block(Cursor& c) {
  c.expect('e');
  c.expect('[');
  Coweight mu;
  mu.k = c.integer(false);
  c.expect('a');
  mu.m = c.integer(true);
  c.expect('d');
  mu.l = c.integer(true);
  c.expect('L');
  c.expect(']');
  return mu;
}

}  // namespace

WeylElt parse_word(std::string_view text) {
  Cursor c{text};
  WeylElt w = weyl_e();
  bool any = false;
  c.skip_ws();
  while (!c.done()) {
    w = mul(w, word_token(c));
    any = true;
    c.skip_ws();
  }
  if (!any) throw ParseError("empty word", 0);
  return w;
}

WTElement parse_element(std::string_view text) {
  Cursor c{text};
  WeylElt w = weyl_e();
  c.skip_ws();
  while (!c.done() && !at_coweight_block(c)) {
    w = mul(w, word_token(c));
    c.skip_ws();
  }
  if (c.done()) throw ParseError("expected coweight block e[...]", c.pos);
  Coweight mu = coweight_block(c);
  c.skip_ws();
  if (!c.done()) throw ParseError("trailing input after element", c.pos);
  if (!in_tits_cone(mu))
    throw OutsideTitsCone("element coweight outside the Tits cone: " + to_string(mu));
  return {w, mu};
}

std::string to_string(const AffineRoot& r) {
  std::string out = r.eps == 1 ? "a" : "-a";
  if (r.n != 0) {
    out += r.n > 0 ? '+' : '-';
    std::int64_t n = r.n > 0 ? r.n : -r.n;
    if (n != 1) out += std::to_string(n);
    out += 'd';
  }
  return out;
}

std::string to_string(const Coweight& mu) {
  auto signed_part = [](std::int64_t v, char tag) {
    std::string s = v < 0 ? "-" : "+";
    s += std::to_string(v < 0 ? -v : v);
    s += tag;
    return s;
  };
  return std::to_string(mu.k) + "a" + signed_part(mu.m, 'd') + signed_part(mu.l, 'L');
}

std::string to_string(const DoubleAffineRoot& r) {
  std::string out = to_string(r.base);
  if (r.m_pi != 0) {
    out += r.m_pi > 0 ? '+' : '-';
    std::int64_t n = r.m_pi > 0 ? r.m_pi : -r.m_pi;
    if (n != 1) out += std::to_string(n);
    out += "pi";
  }
  return out;
}

std::string format_element(const WTElement& x) {
  return to_string(x.w) + " e[" + to_string(x.mu) + "]";
}

}  // namespace wtdem
