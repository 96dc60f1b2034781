#include "motivica/unirings.hpp"

#include <algorithm>
#include <numeric>

#include "motivica/errors.hpp"

namespace motivica {

ZPoly zp_one() { return {{0, Int(1)}}; }

ZPoly zp_monomial(long e, const Int& c) {
  ZPoly p;
  if (c != 0) p[e] = c;
  return p;
}

void zp_add_term(ZPoly& p, long e, const Int& c) {
  if (c == 0) return;
  p[e] += c;
  if (p[e] == 0) p.erase(e);
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  for (const auto& [e, c] : b) zp_add_term(r, e, c);
  return r;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  ZPoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) zp_add_term(r, ea + eb, ca * cb);
  return r;
}

ZPoly zp_neg(const ZPoly& a) {
  ZPoly r;
  for (const auto& [e, c] : a) r[e] = -c;
  return r;
}

ZPoly zp_pow(const ZPoly& a, long k) {
  ZPoly r = zp_one();
  ZPoly base = a;
  while (k > 0) {
    if (k & 1) r = zp_mul(r, base);
    base = zp_mul(base, base);
    k >>= 1;
  }
  return r;
}

Rat zp_eval(const ZPoly& p, const Rat& x) {
  Rat s = 0;
  for (const auto& [e, c] : p) {
    Rat xe = 1;
    Rat base = e >= 0 ? x : Rat(1) / x;
    long k = e >= 0 ? e : -e;
    for (long i = 0; i < k; ++i) xe *= base;
    s += Rat(c) * xe;
  }
  s.canonicalize();
  return s;
}

bool zp_is_zero(const ZPoly& p) { return p.empty(); }

namespace {

std::string term_text(const Int& c, const std::string& var_part, bool implicit_mult,
                      bool latex) {
  Int ac = abs(c);
  if (var_part.empty()) return ac.get_str();
  if (ac == 1) return var_part;
  if (implicit_mult || latex) return ac.get_str() + var_part;
  return ac.get_str() + "*" + var_part;
}

std::string var_power(const std::string& var, long e, bool latex) {
  if (e == 0) return "";
  if (e == 1) return var;
  if (latex) return var + "^{" + std::to_string(e) + "}";
  return var + "^" + std::to_string(e);
}

std::string join_terms(const std::vector<std::pair<bool, std::string>>& parts) {
  if (parts.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [neg, body] : parts) {
    if (first) {
      out += (neg ? "-" : "") + body;
      first = false;
    } else {
      out += (neg ? "-" : "+") + body;
    }
  }
  return out;
}

std::string zp_text(const ZPoly& p, const std::string& var, bool implicit_mult, bool latex) {
  std::vector<std::pair<bool, std::string>> parts;
  for (const auto& [e, c] : p)
    parts.emplace_back(c < 0, term_text(c, var_power(var, e, latex), implicit_mult, latex));
  return join_terms(parts);
}

}  // namespace

std::string zp_str(const ZPoly& p, const std::string& var, bool implicit_mult) {
  return zp_text(p, var, implicit_mult, false);
}

std::string zp_latex(const ZPoly& p, const std::string& var) {
  return zp_text(p, var, false, true);
}

QPoly qp_from_zp(const ZPoly& a) {
  QPoly r;
  for (const auto& [e, c] : a) r[e] = Rat(c);
  return r;
}

static void qp_add_term(QPoly& p, long e, const Rat& c) {
  if (c == 0) return;
  Rat nc = p.count(e) ? p[e] + c : c;
  nc.canonicalize();
  if (nc == 0)
    p.erase(e);
  else
    p[e] = nc;
}

QPoly qp_add(const QPoly& a, const QPoly& b) {
  QPoly r = a;
  for (const auto& [e, c] : b) qp_add_term(r, e, c);
  return r;
}

QPoly qp_sub(const QPoly& a, const QPoly& b) {
  QPoly r = a;
  for (const auto& [e, c] : b) qp_add_term(r, e, -c);
  return r;
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
  QPoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) qp_add_term(r, ea + eb, ca * cb);
  return r;
}

void qp_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  if (b.empty()) throw ValidationError("polynomial division by zero");
  q.clear();
  r = a;
  long db = b.rbegin()->first;
  const Rat& lb = b.rbegin()->second;
  while (!r.empty() && r.rbegin()->first >= db) {
    long e = r.rbegin()->first - db;
    Rat c = r.rbegin()->second / lb;
    c.canonicalize();
    qp_add_term(q, e, c);
    for (const auto& [eb, cb] : b) qp_add_term(r, e + eb, -(c * cb));
  }
}

QPoly qp_gcd(QPoly a, QPoly b) {
  while (!b.empty()) {
    QPoly q, r;
    qp_divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  // make monic
  Rat lead = a.rbegin()->second;
  QPoly r;
  for (const auto& [e, c] : a) {
    Rat nc = c / lead;
    nc.canonicalize();
    r[e] = nc;
  }
  return r;
}

bool qp_is_zero(const QPoly& p) { return p.empty(); }

Rat qp_eval(const QPoly& p, const Rat& x) {
  Rat s = 0;
  for (const auto& [e, c] : p) {
    Rat xe = 1;
    Rat base = e >= 0 ? x : Rat(1) / x;
    long k = e >= 0 ? e : -e;
    for (long i = 0; i < k; ++i) xe *= base;
    s += c * xe;
  }
  s.canonicalize();
  return s;
}

namespace {

std::string frac_var_power(const std::string& var, const Rat& e, bool latex) {
  if (e == 0) return "";
  if (e == 1) return var;
  if (latex) return var + "^{" + rat_str(e) + "}";
  if (rat_is_integer(e) && e > 0) return var + "^" + rat_num(e).get_str();
  return var + "^(" + rat_str(e) + ")";
}

std::string fracpoly_text(const FracPoly& p, const std::string& var, bool latex) {
  std::vector<std::pair<bool, std::string>> parts;
  for (const auto& [e, c] : p)
    parts.emplace_back(c < 0, term_text(c, frac_var_power(var, e, latex), latex, latex));
  return join_terms(parts);
}

}  // namespace

std::string fracpoly_str(const FracPoly& p, const std::string& var) {
  return fracpoly_text(p, var, false);
}

std::string fracpoly_latex(const FracPoly& p, const std::string& var) {
  return fracpoly_text(p, var, true);
}

namespace {

// Scale a pair of Q-polys to coprime integer polys with a common factor.
void normalize_pair(const QPoly& n, const QPoly& d, ZPoly& zn, ZPoly& zd) {
  Int lcm = 1;
  for (const auto& [e, c] : n) {
    (void)e;
    lcm = int_lcm(lcm, rat_den(c));
  }
  for (const auto& [e, c] : d) {
    (void)e;
    lcm = int_lcm(lcm, rat_den(c));
  }
  zn.clear();
  zd.clear();
  for (const auto& [e, c] : n) zn[e] = rat_num(Rat(c * Rat(lcm)));
  for (const auto& [e, c] : d) zd[e] = rat_num(Rat(c * Rat(lcm)));
  Int g = 0;
  for (const auto& [e, c] : zn) {
    (void)e;
    g = int_gcd(g, c);
  }
  for (const auto& [e, c] : zd) {
    (void)e;
    g = int_gcd(g, c);
  }
  if (g > 1) {
    for (auto& [e, c] : zn) c = int_exact_div(c, g);
    for (auto& [e, c] : zd) c = int_exact_div(c, g);
  }
}

}  // namespace

RatFun RatFun::make(const QPoly& n, const QPoly& d, const std::string& var) {
  RatFun f;
  f.var = var;
  if (d.empty()) throw ValidationError("rational function with zero denominator");
  if (n.empty()) {
    f.num = {};
    f.den = zp_one();
    return f;
  }
  QPoly g = qp_gcd(n, d);
  QPoly qn, qd, rem;
  qp_divmod(n, g, qn, rem);
  if (!rem.empty()) throw ValidationError("gcd reduction failed");
  qp_divmod(d, g, qd, rem);
  if (!rem.empty()) throw ValidationError("gcd reduction failed");
  normalize_pair(qn, qd, f.num, f.den);
  // lowest nonzero denominator coefficient positive
  if (f.den.begin()->second < 0) {
    f.num = zp_neg(f.num);
    f.den = zp_neg(f.den);
  }
  return f;
}

std::string RatFun::str() const {
  std::string n = zp_str(num, var);
  if (den == zp_one()) return n;
  std::string d = zp_str(den, var);
  std::string np = num.size() > 1 ? "(" + n + ")" : n;
  std::string dp = den.size() > 1 ? "(" + d + ")" : d;
  return np + "/" + dp;
}

std::string RatFun::latex() const {
  if (den == zp_one()) return zp_latex(num, var);
  return "\\frac{" + zp_latex(num, var) + "}{" + zp_latex(den, var) + "}";
}

SRational SRational::make(const QPoly& n, const QPoly& d,
                          const std::vector<std::pair<Int, Int>>& candidates) {
  SRational out;
  if (d.empty()) throw ValidationError("rational function with zero denominator");
  if (n.empty()) {
    out.num = {};
    out.scal = 1;
    return out;
  }
  QPoly g = qp_gcd(n, d);
  QPoly qn, qd, rem;
  qp_divmod(n, g, qn, rem);
  if (!rem.empty()) throw ValidationError("gcd reduction failed");
  qp_divmod(d, g, qd, rem);
  if (!rem.empty()) throw ValidationError("gcd reduction failed");

  // normalize candidate linear factors to primitive (a, b) with b > 0
  std::vector<std::pair<Int, Int>> cands;
  for (auto [a, b] : candidates) {
    if (b == 0) continue;
    if (b < 0) {
      a = -a;
      b = -b;
    }
    Int gg = int_gcd(abs(a), b);
    if (gg > 1) {
      a = int_exact_div(a, gg);
      b = int_exact_div(b, gg);
    }
    cands.emplace_back(a, b);
  }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

  for (const auto& [a, b] : cands) {
    QPoly lin{{0, Rat(a)}, {1, Rat(b)}};
    if (a == 0) lin.erase(0);
    while (true) {
      QPoly q, r;
      qp_divmod(qd, lin, q, r);
      if (!r.empty() || q.empty()) break;
      qd = q;
      out.factors.emplace_back(a, b);
    }
  }
  if (qd.size() != 1 || qd.begin()->first != 0)
    throw ValidationError("denominator failed to split into linear factors");
  Rat c = qd.begin()->second;

  QPoly scaled;
  for (const auto& [e, cf] : qn) {
    Rat v = cf / c;
    v.canonicalize();
    scaled[e] = v;
  }
  // content = gcd(numerators) / lcm(denominators), positive
  Int gn = 0, ld = 1;
  for (const auto& [e, cf] : scaled) {
    (void)e;
    gn = int_gcd(gn, abs(rat_num(cf)));
    ld = int_lcm(ld, rat_den(cf));
  }
  Rat content(gn, ld);
  content.canonicalize();
  for (const auto& [e, cf] : scaled) {
    Rat v = cf / content;
    v.canonicalize();
    if (rat_den(v) != 1) throw ValidationError("numerator normalization failed");
    out.num[e] = rat_num(v);
  }
  // value = content * num / prod(factors); content = p/r -> num *= p, scal = r
  Int p = rat_num(content);
  Int r2 = rat_den(content);
  if (p < 0) throw ValidationError("negative content");
  if (p != 1)
    for (auto& [e, cf] : out.num) cf *= p;
  out.scal = r2;
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

Rat SRational::eval(const Rat& s) const {
  Rat n = zp_eval(num, s);
  Rat d = Rat(scal);
  for (const auto& [a, b] : factors) d *= Rat(a) + Rat(b) * s;
  if (d == 0) throw PoleAtOne("evaluation at a pole");
  Rat v = n / d;
  v.canonicalize();
  return v;
}

std::string SRational::str() const {
  if (num.empty()) return "0";
  std::string n = zp_str(num, "s", true);
  bool trivial_den = scal == 1 && factors.empty();
  if (trivial_den) return n;
  std::string np = num.size() > 1 ? "(" + n + ")" : n;
  std::string d;
  if (scal != 1 || factors.empty()) d += scal.get_str();
  for (const auto& [a, b] : factors) {
    ZPoly lin;
    zp_add_term(lin, 0, a);
    zp_add_term(lin, 1, b);
    d += "(" + zp_str(lin, "s", true) + ")";
  }
  bool needs_outer = (scal != 1 && !factors.empty()) || factors.size() > 1;
  if (needs_outer) d = "(" + d + ")";
  return np + "/" + d;
}

std::string SRational::latex() const {
  if (num.empty()) return "0";
  bool trivial_den = scal == 1 && factors.empty();
  if (trivial_den) return zp_latex(num, "s");
  std::string d;
  if (scal != 1 || factors.empty()) d += scal.get_str();
  for (const auto& [a, b] : factors) {
    ZPoly lin;
    zp_add_term(lin, 0, a);
    zp_add_term(lin, 1, b);
    d += "(" + zp_latex(lin, "s") + ")";
  }
  return "\\frac{" + zp_latex(num, "s") + "}{" + d + "}";
}

void QT::add_num(long qe, long te, const Int& c) {
  if (c == 0) return;
  auto key = std::make_pair(qe, te);
  num[key] += c;
  if (num[key] == 0) num.erase(key);
}

namespace {

// Divide num (bivariate, q-exponent keyed first) by q^nu - t^N; returns true
// and the quotient when the division is exact.
bool qt_divide(const std::map<std::pair<long, long>, Int>& num, long nu, long N,
               std::map<std::pair<long, long>, Int>& quotient) {
  quotient.clear();
  std::map<std::pair<long, long>, Int> rem = num;
  while (!rem.empty()) {
    // highest q-exponent term
    auto it = std::prev(rem.end());
    long qe = it->first.first;
    if (qe < nu) return false;
    long te = it->first.second;
    Int c = it->second;
    quotient[{qe - nu, te}] += c;
    // subtract c * q^{qe-nu} t^{te} * (q^nu - t^N)
    rem.erase(it);
    auto key = std::make_pair(qe - nu, te + N);
    rem[key] += c;
    if (rem[key] == 0) rem.erase(key);
  }
  return true;
}

// Divide num by an arbitrary bivariate polynomial whose leading term (in the
// (q, t) lexicographic order) has coefficient 1; exact division only.
bool qt_divide_poly(const std::map<std::pair<long, long>, Int>& num,
                    const std::map<std::pair<long, long>, Int>& div,
                    std::map<std::pair<long, long>, Int>& quotient) {
  quotient.clear();
  auto lead = std::prev(div.end());
  std::map<std::pair<long, long>, Int> rem = num;
  while (!rem.empty()) {
    auto it = std::prev(rem.end());
    long dq = it->first.first - lead->first.first;
    long dt = it->first.second - lead->first.second;
    if (dq < 0 || dt < 0) return false;
    Int c = it->second;
    quotient[{dq, dt}] += c;
    for (const auto& [k, dc] : div) {
      auto key = std::make_pair(k.first + dq, k.second + dt);
      rem[key] -= c * dc;
      if (rem[key] == 0) rem.erase(key);
    }
  }
  return true;
}

}  // namespace

void QT::canonicalize() {
  for (auto it = num.begin(); it != num.end();) {
    if (it->second == 0)
      it = num.erase(it);
    else
      ++it;
  }
  if (num.empty()) {
    qpow = 0;
    factors.clear();
    return;
  }
  // whole-factor cancellation
  auto cancel_whole = [&] {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto it = factors.begin(); it != factors.end(); ++it) {
        std::map<std::pair<long, long>, Int> q;
        if (qt_divide(num, it->first, it->second, q)) {
          num = std::move(q);
          factors.erase(it);
          changed = true;
          break;
        }
      }
    }
  };
  cancel_whole();
  // partial reduction: q^nu - t^N = (q^(nu/k) - t^(N/k)) * C for k | gcd(nu,N);
  // when the cofactor C divides the numerator, shrink the factor and divide.
  bool reduced = true;
  while (reduced) {
    reduced = false;
    for (auto it = factors.begin(); it != factors.end() && !reduced; ++it) {
      long nu = it->first, N = it->second;
      long g = std::gcd(nu, N);
      for (long k = g; k >= 2 && !reduced; --k) {
        if (g % k != 0) continue;
        long nu0 = nu / k, N0 = N / k;
        std::map<std::pair<long, long>, Int> cof;
        for (long j = 0; j < k; ++j) cof[{j * nu0, (k - 1 - j) * N0}] = 1;
        std::map<std::pair<long, long>, Int> q;
        if (qt_divide_poly(num, cof, q)) {
          num = std::move(q);
          factors.erase(it);
          factors.insert({nu0, N0});
          reduced = true;
        }
      }
    }
    if (reduced) cancel_whole();
  }
  // q-power cancellation
  long minq = num.begin()->first.first;
  for (const auto& [k, c] : num) {
    (void)c;
    minq = std::min(minq, k.first);
  }
  if (minq < 0) {
    std::map<std::pair<long, long>, Int> shifted;
    for (const auto& [k, c] : num) shifted[{k.first - minq, k.second}] = c;
    num = std::move(shifted);
    qpow += -minq;
    minq = 0;
  }
  long cancel = std::min(minq, qpow);
  if (cancel > 0) {
    std::map<std::pair<long, long>, Int> shifted;
    for (const auto& [k, c] : num) shifted[{k.first - cancel, k.second}] = c;
    num = std::move(shifted);
    qpow -= cancel;
  }
}

std::vector<std::map<long, Int>> QT::t_series(long K) const {
  std::vector<std::map<long, Int>> s(static_cast<size_t>(K) + 1);
  for (const auto& [k, c] : num) {
    if (k.second <= K) {
      s[k.second][k.first - qpow] += c;
      if (s[k.second][k.first - qpow] == 0) s[k.second].erase(k.first - qpow);
    }
  }
  for (const auto& [nu, N] : factors) {
    if (N < 1) throw ValidationError("t-series requires every factor to involve t");
    std::vector<std::map<long, Int>> next(static_cast<size_t>(K) + 1);
    for (long te = 0; te <= K; ++te) {
      for (long j = 0; j * N <= te; ++j) {
        long src = te - j * N;
        for (const auto& [qe, c] : s[src]) {
          long nq = qe - nu * (j + 1);
          next[te][nq] += c;
          if (next[te][nq] == 0) next[te].erase(nq);
        }
      }
    }
    s = std::move(next);
  }
  return s;
}

RatFun QT::substitute_q(const Rat& qv) const {
  if (qv == 0) throw ValidationError("q must be nonzero");
  auto qpowr = [&](long e) {
    Rat r = 1;
    for (long i = 0; i < e; ++i) r *= qv;
    return r;
  };
  QPoly n;
  for (const auto& [k, c] : num) {
    Rat cur = n.count(k.second) ? n[k.second] : Rat(0);
    cur += Rat(c) * qpowr(k.first);
    cur.canonicalize();
    if (cur == 0)
      n.erase(k.second);
    else
      n[k.second] = cur;
  }
  QPoly d{{0, qpowr(qpow)}};
  for (const auto& [nu, N] : factors) {
    QPoly f{{0, qpowr(nu)}, {N, Rat(-1)}};
    if (N == 0) {
      f = QPoly{{0, qpowr(nu) - 1}};
      if (f.begin()->second == 0) throw ValidationError("denominator vanishes at this q");
    }
    d = qp_mul(d, f);
  }
  return RatFun::make(n, d, "t");
}

namespace {

std::string qt_factor_text(long nu, long N, bool latex) {
  std::string qpart = nu == 0 ? "1" : var_power("q", nu, latex);
  if (N == 0) return "(" + qpart + "-1)";
  return "(" + qpart + "-" + var_power("t", N, latex) + ")";
}

}  // namespace

std::string QT::str() const {
  if (num.empty()) return "0";
  // numerator: descending q-exponent, then ascending t-exponent
  std::vector<std::pair<bool, std::string>> parts;
  std::vector<std::pair<std::pair<long, long>, Int>> entries(num.begin(), num.end());
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.first.first != b.first.first) return a.first.first > b.first.first;
    return a.first.second < b.first.second;
  });
  for (const auto& [k, c] : entries) {
    std::string qp = var_power("q", k.first, false);
    std::string tp = var_power("t", k.second, false);
    std::string mono = qp.empty() ? tp : (tp.empty() ? qp : qp + "*" + tp);
    parts.emplace_back(c < 0, term_text(c, mono, false, false));
  }
  std::string n = join_terms(parts);
  if (qpow == 0 && factors.empty()) return n;
  std::string np = num.size() > 1 ? "(" + n + ")" : n;
  std::vector<std::string> pieces;
  if (qpow > 0) pieces.push_back(var_power("q", qpow, false));
  for (const auto& [nu, N] : factors) pieces.push_back(qt_factor_text(nu, N, false));
  std::string d;
  for (const auto& s : pieces) d += s;
  if (pieces.size() > 1) d = "(" + d + ")";
  return np + "/" + d;
}

std::string QT::latex() const {
  if (num.empty()) return "0";
  std::vector<std::pair<bool, std::string>> parts;
  std::vector<std::pair<std::pair<long, long>, Int>> entries(num.begin(), num.end());
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.first.first != b.first.first) return a.first.first > b.first.first;
    return a.first.second < b.first.second;
  });
  for (const auto& [k, c] : entries) {
    std::string mono = var_power("q", k.first, true) + var_power("t", k.second, true);
    parts.emplace_back(c < 0, term_text(c, mono, true, true));
  }
  std::string n = join_terms(parts);
  if (qpow == 0 && factors.empty()) return n;
  std::string d;
  if (qpow > 0) d += var_power("q", qpow, true);
  for (const auto& [nu, N] : factors) d += qt_factor_text(nu, N, true);
  return "\\frac{" + n + "}{" + d + "}";
}

}  // namespace motivica
