#include "motivica/eqclass.hpp"

#include "motivica/errors.hpp"
#include "motivica/textio.hpp"

namespace motivica {

void EqClass::set(const Rat& chr, const EPoly& e) {
  Rat c = mod1(chr);
  if (e.is_zero()) {
    parts_.erase(c);
    return;
  }
  parts_[c] = e;
}

void EqClass::add(const Rat& chr, const EPoly& e) {
  if (e.is_zero()) return;
  Rat c = mod1(chr);
  auto it = parts_.find(c);
  if (it == parts_.end()) {
    parts_.emplace(c, e);
  } else {
    it->second += e;
    if (it->second.is_zero()) parts_.erase(it);
  }
}

EqClass EqClass::operator-() const {
  EqClass r;
  for (const auto& [a, e] : parts_) r.parts_.emplace(a, -e);
  return r;
}

EqClass& EqClass::operator+=(const EqClass& o) {
  for (const auto& [a, e] : o.parts_) add(a, e);
  return *this;
}

EqClass& EqClass::operator-=(const EqClass& o) {
  for (const auto& [a, e] : o.parts_) add(a, -e);
  return *this;
}

EqClass operator*(const EqClass& a, const EqClass& b) {
  EqClass r;
  for (const auto& [aa, ea] : a.parts_)
    for (const auto& [ab, eb] : b.parts_) r.add(aa + ab, ea * eb);
  return r;
}

EqClass EqClass::scale(const EPoly& e) const {
  EqClass r;
  for (const auto& [a, p] : parts_) r.add(a, p * e);
  return r;
}

EPoly EqClass::aug() const {
  auto it = parts_.find(Rat(0));
  return it == parts_.end() ? EPoly() : it->second;
}

EqClass EqClass::involute() const {
  EqClass r;
  for (const auto& [a, e] : parts_) r.add(mod1(-a), e);
  return r;
}

EqClass EqClass::involute_hodge() const {
  EqClass r;
  for (const auto& [a, e] : parts_) r.add(mod1(-a), e.swap_uv());
  return r;
}

EPoly EqClass::spe() const {
  EPoly out;
  for (const auto& [a, e] : parts_) {
    if (a == 0) {
      for (const auto& [ex, c] : e.terms()) {
        if (!rat_is_integer(ex.p + ex.q))
          throw ValidationError("specialization violates p+q integrality");
        out.add_term(ex.p, ex.q, c);
      }
    } else {
      for (const auto& [ex, c] : e.terms()) {
        Rat p = ex.p + a;
        Rat q = ex.q + Rat(1) - a;
        if (!rat_is_integer(p + q))
          throw ValidationError("specialization violates p+q integrality");
        out.add_term(p, q, c);
      }
    }
  }
  return out;
}

EqClass quasi_conv(const EqClass& a, const EqClass& b) {
  EqClass r;
  const EPoly u = EPoly::u_var();
  const EPoly v = EPoly::v_var();
  const EPoly uv = EPoly::L();
  for (const auto& [aa, ea] : a.parts())
    for (const auto& [ab, eb] : b.parts()) {
      EPoly prod = ea * eb;
      if (aa == 0 || ab == 0) {
        r.add(aa + ab, prod);
      } else {
        Rat s = aa + ab;  // both lifts in (0,1)
        if (s == 1)
          r.add(Rat(0), prod * uv);
        else if (s < 1)
          r.add(s, prod * v);
        else
          r.add(s, prod * u);
      }
    }
  return r;
}

EqClass join(const EqClass& a, const EqClass& b) {
  EPoly Lm1 = EPoly::L() - EPoly(1);
  EqClass torus(Lm1 * (a * b).aug());
  return torus - quasi_conv(a, b);
}

EPoly mapping_torus(const EqClass& a) { return (EPoly::L() - EPoly(1)) * a.aug(); }

FracPoly spectrum_poly(const EPoly& fh) {
  FracPoly out;
  for (const auto& [e, c] : fh.terms()) {
    out[e.p] += c;
    if (out[e.p] == 0) out.erase(e.p);
  }
  return out;
}

std::string EqClass::str() const {
  if (parts_.empty()) return "0";
  std::string out = "{";
  bool first = true;
  for (const auto& [a, e] : parts_) {
    if (!first) out += ", ";
    first = false;
    out += rat_str(a) + ":" + e.str();
  }
  out += "}";
  return out;
}

std::string EqClass::latex() const {
  if (parts_.empty()) return "0";
  std::string out = "\\{";
  bool first = true;
  for (const auto& [a, e] : parts_) {
    if (!first) out += ",\\ ";
    first = false;
    out += rat_str(a) + "\\colon " + e.latex();
  }
  out += "\\}";
  return out;
}

EqClass parse_eqclass(const std::string& text) {
  // trim
  size_t b = text.find_first_not_of(" \t\r\n");
  size_t e = text.find_last_not_of(" \t\r\n");
  if (b == std::string::npos) throw ParseError("empty equivariant class");
  std::string s = text.substr(b, e - b + 1);
  if (s == "0") return EqClass();
  if (s.front() != '{' || s.back() != '}')
    throw ParseError("equivariant class must be '0' or brace-delimited");
  std::string inner = s.substr(1, s.size() - 2);
  EqClass out;
  size_t pos = 0;
  int depth = 0;
  std::vector<std::string> entries;
  std::string cur;
  for (char c : inner) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      entries.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !entries.empty()) entries.push_back(cur);
  (void)pos;
  for (const auto& entry : entries) {
    size_t colon = entry.find(':');
    if (colon == std::string::npos)
      throw ParseError("missing ':' in equivariant class entry '" + entry + "'");
    std::string key = entry.substr(0, colon);
    size_t kb = key.find_first_not_of(" \t");
    size_t ke = key.find_last_not_of(" \t");
    if (kb == std::string::npos) throw ParseError("empty character in equivariant class");
    key = key.substr(kb, ke - kb + 1);
    Rat chr = parse_character(key);
    EPoly val = gpoly_to_epoly(parse_poly_expr(entry.substr(colon + 1)),
                               "equivariant class part");
    if (out.parts().count(chr))
      throw ParseError("duplicate character '" + key + "' in equivariant class");
    out.add(chr, val);
  }
  return out;
}

}  // namespace motivica
