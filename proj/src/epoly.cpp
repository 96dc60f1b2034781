#include "motivica/epoly.hpp"

#include <sstream>

#include "motivica/errors.hpp"

namespace motivica {

EPoly EPoly::monomial(const Rat& p, const Rat& q, const Int& c) {
  EPoly e;
  e.add_term(p, q, c);
  return e;
}

EPoly EPoly::projective_space(long n) {
  EPoly e;
  for (long i = 0; i < n; ++i) e.add_term(Rat(i), Rat(i), Int(1));
  return e;
}

bool EPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Expo{Rat(0), Rat(0)} &&
         terms_.begin()->second == 1;
}

void EPoly::add_term(const Rat& p, const Rat& q, const Int& c) {
  if (c == 0) return;
  Expo e{p, q};
  e.p.canonicalize();
  e.q.canonicalize();
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Int EPoly::coeff(const Rat& p, const Rat& q) const {
  auto it = terms_.find(Expo{p, q});
  return it == terms_.end() ? Int(0) : it->second;
}

EPoly EPoly::operator-() const {
  EPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

EPoly& EPoly::operator+=(const EPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.p, e.q, c);
  return *this;
}

EPoly& EPoly::operator-=(const EPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.p, e.q, -c);
  return *this;
}

EPoly operator*(const EPoly& a, const EPoly& b) {
  EPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea.p + eb.p, ea.q + eb.q, ca * cb);
  return r;
}

EPoly EPoly::pow(long k) const {
  if (k < 0) {
    if (terms_.size() != 1)
      throw ParseError("negative exponent on a non-monomial expression");
    const auto& [e, c] = *terms_.begin();
    if (c != 1 && c != -1)
      throw ParseError("negative exponent on a monomial with non-unit coefficient");
    Int cc = (k % 2 == 0) ? Int(1) : c;
    return monomial(e.p * Rat(k), e.q * Rat(k), cc);
  }
  EPoly r(1);
  EPoly base = *this;
  long kk = k;
  while (kk > 0) {
    if (kk & 1) r = r * base;
    base = base * base;
    kk >>= 1;
  }
  return r;
}

EPoly EPoly::swap_uv() const {
  EPoly r;
  for (const auto& [e, c] : terms_) r.add_term(e.q, e.p, c);
  return r;
}

Int EPoly::euler() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::map<Rat, Int> EPoly::weight() const {
  std::map<Rat, Int> w;
  for (const auto& [e, c] : terms_) {
    Rat k = e.p + e.q;
    k.canonicalize();
    w[k] += c;
    if (w[k] == 0) w.erase(k);
  }
  return w;
}

std::map<Rat, Int> EPoly::subs_v_uinv() const {
  std::map<Rat, Int> w;
  for (const auto& [e, c] : terms_) {
    Rat k = e.p - e.q;
    k.canonicalize();
    w[k] += c;
    if (w[k] == 0) w.erase(k);
  }
  return w;
}

std::map<Rat, Int> EPoly::diagonal_exponents() const {
  std::map<Rat, Int> w;
  for (const auto& [e, c] : terms_) {
    if (e.p != e.q)
      throw NonTateClass("class has an off-diagonal term u^(" + rat_str(e.p) + ")*v^(" +
                         rat_str(e.q) + ")");
    w[e.p] = c;
  }
  return w;
}

bool EPoly::is_uv_univariate() const {
  for (const auto& [e, c] : terms_) {
    (void)c;
    if (e.p != e.q) return false;
  }
  return true;
}

Int EPoly::denominator_bound() const {
  Int m = 1;
  for (const auto& [e, c] : terms_) {
    (void)c;
    m = int_lcm(m, rat_den(e.p));
    m = int_lcm(m, rat_den(e.q));
  }
  return m;
}

namespace {

// Sparse univariate Laurent polynomial over Q, exponent -> coefficient.
using UniQ = std::map<Rat, Rat>;

// Divide a by b exactly (descending); returns false when not divisible.
bool uni_divide(const UniQ& a, const UniQ& b, UniQ& quotient) {
  quotient.clear();
  if (a.empty()) return true;
  UniQ rem = a;
  const Rat& bmax = b.rbegin()->first;
  const Rat& bmin = b.begin()->first;
  const Rat& blead = b.rbegin()->second;
  Rat qmin = a.begin()->first - bmin;  // lowest exponent an exact quotient can use
  while (!rem.empty()) {
    Rat e = rem.rbegin()->first;
    Rat qe = e - bmax;
    if (qe < qmin) return false;
    Rat qc = rem.rbegin()->second / blead;
    qc.canonicalize();
    quotient[qe] = qc;
    for (const auto& [be, bc] : b) {
      Rat ne = qe + be;
      ne.canonicalize();
      auto it = rem.find(ne);
      Rat cur = (it == rem.end()) ? Rat(0) : it->second;
      cur -= qc * bc;
      cur.canonicalize();
      if (cur == 0) {
        if (it != rem.end()) rem.erase(it);
      } else {
        rem[ne] = cur;
      }
    }
  }
  return true;
}

}  // namespace

EPoly EPoly::exact_div(const EPoly& b) const {
  if (b.is_zero()) throw NonDivisible("division by zero");
  if (!b.is_uv_univariate())
    throw NonDivisible("divisor is not univariate in a power of u*v");
  if (is_zero()) return EPoly();

  UniQ bdiag;
  for (const auto& [e, c] : b.terms_) bdiag[e.p] = Rat(c);

  // Group dividend terms by the off-diagonal shift p - q; each group is a
  // univariate Laurent polynomial along the uv-diagonal.
  std::map<Rat, UniQ> groups;
  for (const auto& [e, c] : terms_) {
    Rat delta = e.p - e.q;
    delta.canonicalize();
    groups[delta][e.q] = Rat(c);
  }

  EPoly result;
  for (const auto& [delta, grp] : groups) {
    UniQ q;
    if (!uni_divide(grp, bdiag, q))
      throw NonDivisible("quotient has a nonzero remainder");
    for (const auto& [qe, qc] : q) {
      if (rat_den(qc) != 1) throw NonDivisible("quotient has non-integer coefficients");
      result.add_term(qe + delta, qe, rat_num(qc));
    }
  }
  if (result * b != *this) throw NonDivisible("division verification failed");
  return result;
}

namespace {

std::string expo_text(const std::string& var, const Rat& k, bool latex) {
  if (k == 0) return "";
  if (k == 1) return var;
  if (latex) return var + "^{" + rat_str(k) + "}";
  if (rat_is_integer(k) && k > 0) return var + "^" + rat_num(k).get_str();
  return var + "^(" + rat_str(k) + ")";
}

}  // namespace

std::string EPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Int ac = abs(c);
    bool neg = c < 0;
    std::string mono;
    std::string up = expo_text("u", e.p, false);
    std::string vp = expo_text("v", e.q, false);
    if (!up.empty() && !vp.empty())
      mono = up + "*" + vp;
    else
      mono = up + vp;
    std::string body;
    if (mono.empty())
      body = ac.get_str();
    else if (ac == 1)
      body = mono;
    else
      body = ac.get_str() + "*" + mono;
    if (first) {
      out += (neg ? "-" : "") + body;
      first = false;
    } else {
      out += (neg ? "-" : "+") + body;
    }
  }
  return out;
}

std::string EPoly::latex() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Int ac = abs(c);
    bool neg = c < 0;
    std::string mono = expo_text("u", e.p, true) + expo_text("v", e.q, true);
    std::string body;
    if (mono.empty())
      body = ac.get_str();
    else if (ac == 1)
      body = mono;
    else
      body = ac.get_str() + mono;
    if (first) {
      out += (neg ? "-" : "") + body;
      first = false;
    } else {
      out += (neg ? "-" : "+") + body;
    }
  }
  return out;
}

}  // namespace motivica
