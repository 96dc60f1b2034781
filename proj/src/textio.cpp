#include "motivica/textio.hpp"

#include <cctype>
#include <vector>

#include "motivica/errors.hpp"

namespace motivica {

void GPoly::add(const Mono& m, const Int& c) {
  if (c == 0) return;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

GPoly GPoly::operator-() const {
  GPoly r;
  for (const auto& [m, c] : terms) r.terms.emplace(m, -c);
  return r;
}

GPoly& GPoly::operator+=(const GPoly& o) {
  for (const auto& [m, c] : o.terms) add(m, c);
  return *this;
}

GPoly& GPoly::operator-=(const GPoly& o) {
  for (const auto& [m, c] : o.terms) add(m, -c);
  return *this;
}

GPoly operator*(const GPoly& a, const GPoly& b) {
  GPoly r;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      GPoly::Mono m = ma;
      for (const auto& [v, e] : mb) {
        Rat ne = m.count(v) ? m[v] + e : e;
        ne.canonicalize();
        if (ne == 0)
          m.erase(v);
        else
          m[v] = ne;
      }
      r.add(m, ca * cb);
    }
  return r;
}

GPoly GPoly::pow_rat(const Rat& k) const {
  if (terms.empty()) {
    if (k > 0) return GPoly();
    throw ParseError("zero raised to a non-positive power");
  }
  if (terms.size() == 1) {
    const auto& [m, c] = *terms.begin();
    if (rat_is_integer(k) && k >= 0 && !(c == 1 || c == -1)) {
      // fall through to the general integer-power path below
    } else {
      if (c != 1 && c != -1)
        throw ParseError("fractional or negative exponent on a monomial with non-unit coefficient");
      GPoly r;
      GPoly::Mono nm;
      for (const auto& [v, e] : m) {
        Rat ne = e * k;
        ne.canonicalize();
        if (ne != 0) nm[v] = ne;
      }
      Int nc = 1;
      if (c == -1) {
        if (!rat_is_integer(k))
          throw ParseError("fractional exponent on a negative monomial");
        if (rat_num(k) % 2 != 0) nc = -1;
      }
      r.add(nm, nc);
      return r;
    }
  }
  if (!rat_is_integer(k))
    throw ParseError("fractional exponent on a non-monomial expression");
  if (k < 0) throw ParseError("negative exponent on a non-monomial expression");
  long kk = to_long(rat_num(k), "exponent");
  GPoly r;
  r.add({}, 1);
  GPoly base = *this;
  while (kk > 0) {
    if (kk & 1) r = r * base;
    base = base * base;
    kk >>= 1;
  }
  return r;
}

std::set<std::string> GPoly::variables() const {
  std::set<std::string> vs;
  for (const auto& [m, c] : terms) {
    (void)c;
    for (const auto& [v, e] : m) {
      (void)e;
      vs.insert(v);
    }
  }
  return vs;
}

namespace {

enum class Tok { Num, Ident, Plus, Minus, Star, Caret, LParen, RParen, Slash, End };

struct Token {
  Tok kind;
  std::string text;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Num, s.substr(i, j - i)});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i)});
      i = j;
      continue;
    }
    switch (c) {
      case '+': out.push_back({Tok::Plus, "+"}); break;
      case '-': out.push_back({Tok::Minus, "-"}); break;
      case '*': out.push_back({Tok::Star, "*"}); break;
      case '^': out.push_back({Tok::Caret, "^"}); break;
      case '(': out.push_back({Tok::LParen, "("}); break;
      case ')': out.push_back({Tok::RParen, ")"}); break;
      case '/': out.push_back({Tok::Slash, "/"}); break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "' in expression");
    }
    ++i;
  }
  out.push_back({Tok::End, ""});
  return out;
}

class Parser {
public:
  explicit Parser(const std::string& s) : toks_(tokenize(s)) {}

  GPoly parse() {
    GPoly g = expr();
    if (peek().kind != Tok::End)
      throw ParseError("trailing input near '" + peek().text + "'");
    return g;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind == k) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) throw ParseError(std::string("expected ") + what + " near '" + peek().text + "'");
  }

  GPoly expr() {
    bool neg = false;
    if (accept(Tok::Minus))
      neg = true;
    else
      accept(Tok::Plus);
    GPoly g = term();
    if (neg) g = -g;
    while (true) {
      if (accept(Tok::Plus)) {
        g += term();
      } else if (accept(Tok::Minus)) {
        g -= term();
      } else {
        break;
      }
    }
    return g;
  }

  GPoly term() {
    GPoly g = factor();
    while (true) {
      if (accept(Tok::Star)) {
        g = g * factor();
      } else if (peek().kind == Tok::Num || peek().kind == Tok::Ident ||
                 peek().kind == Tok::LParen) {
        g = g * factor();  // juxtaposition
      } else {
        break;
      }
    }
    return g;
  }

  GPoly factor() {
    GPoly base = primary();
    if (accept(Tok::Caret)) {
      Rat k = exponent();
      base = base.pow_rat(k);
    }
    return base;
  }

  GPoly primary() {
    if (peek().kind == Tok::Num) {
      Token t = take();
      GPoly g;
      g.add({}, Int(t.text));
      return g;
    }
    if (peek().kind == Tok::Ident) {
      Token t = take();
      GPoly g;
      g.add({{t.text, Rat(1)}}, 1);
      return g;
    }
    if (accept(Tok::LParen)) {
      GPoly g = expr();
      expect(Tok::RParen, "')'");
      return g;
    }
    throw ParseError("expected a number, variable or '(' near '" + peek().text + "'");
  }

  Rat exponent() {
    bool neg = accept(Tok::Minus);
    if (peek().kind == Tok::Num) {
      Token t = take();
      Rat k(Int(t.text));
      return neg ? -k : k;
    }
    if (!neg && accept(Tok::LParen)) {
      bool inner_neg = accept(Tok::Minus);
      if (peek().kind != Tok::Num) throw ParseError("expected a number in exponent");
      Int num(take().text);
      Int den = 1;
      if (accept(Tok::Slash)) {
        if (peek().kind != Tok::Num) throw ParseError("expected a denominator in exponent");
        den = Int(take().text);
        if (den == 0) throw ParseError("zero denominator in exponent");
      }
      expect(Tok::RParen, "')' in exponent");
      Rat k(num, den);
      k.canonicalize();
      return inner_neg ? -k : k;
    }
    throw ParseError("expected an integer or parenthesized rational exponent");
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
};

}  // namespace

GPoly parse_poly_expr(const std::string& text) { return Parser(text).parse(); }

Rat parse_rational(const std::string& text) {
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  bool neg = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = text[i] == '-';
    ++i;
  }
  skip_ws();
  size_t j = i;
  while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
  if (j == i) throw ParseError("expected a rational number in '" + text + "'");
  Int num(text.substr(i, j - i));
  Int den = 1;
  i = j;
  skip_ws();
  if (i < text.size() && text[i] == '/') {
    ++i;
    skip_ws();
    j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i) throw ParseError("expected a denominator in '" + text + "'");
    den = Int(text.substr(i, j - i));
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    i = j;
    skip_ws();
  }
  if (i != text.size()) throw ParseError("trailing input in rational '" + text + "'");
  Rat r(num, den);
  r.canonicalize();
  return neg ? Rat(-r) : r;
}

Rat parse_character(const std::string& text) {
  Rat r = parse_rational(text);
  if (r < 0 || r >= 1) throw ParseError("character '" + text + "' is not in [0,1)");
  if (rat_str(r) != text)
    throw ParseError("character '" + text + "' is not in lowest terms (expected '" +
                     rat_str(r) + "')");
  return r;
}

EPoly gpoly_to_epoly(const GPoly& g, const std::string& what) {
  EPoly e;
  for (const auto& [m, c] : g.terms) {
    Rat p = 0, q = 0;
    for (const auto& [v, k] : m) {
      if (v == "u") {
        p += k;
      } else if (v == "v") {
        q += k;
      } else if (v == "L") {
        p += k;
        q += k;
      } else {
        throw ParseError("unexpected variable '" + v + "' in " + what +
                         " (allowed: u, v, L)");
      }
    }
    e.add_term(p, q, c);
  }
  return e;
}

std::map<long, Int> gpoly_to_uni(const GPoly& g, const std::string& var,
                                 bool allow_negative, const std::string& what) {
  std::map<long, Int> out;
  for (const auto& [m, c] : g.terms) {
    Rat k = 0;
    for (const auto& [v, e] : m) {
      if (v != var)
        throw ParseError("unexpected variable '" + v + "' in " + what + " (allowed: " +
                         var + ")");
      k += e;
    }
    if (!rat_is_integer(k))
      throw ParseError("fractional exponent in " + what);
    long kk = to_long(rat_num(k), "exponent");
    if (kk < 0 && !allow_negative)
      throw ParseError("negative exponent in " + what);
    out[kk] += c;
    if (out[kk] == 0) out.erase(kk);
  }
  return out;
}

}  // namespace motivica
