#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "motivica/eqclass.hpp"
#include "motivica/epoly.hpp"
#include "motivica/errors.hpp"

namespace motivica {

// One inverted factor (L^nu * T^{-N} - 1)^{-1} = sum_{k>=1} L^{-nu k} T^{N k}.
// N is a vector of r nonnegative integers, not all zero.
struct MRatFactor {
  long nu = 0;
  std::vector<long> N;
  auto operator<=>(const MRatFactor&) const = default;
};

using FactorSet = std::multiset<MRatFactor>;
using Mono = std::vector<long>;  // T-exponents, length r

template <class C>
struct MRatTraits;

template <>
struct MRatTraits<EPoly> {
  static EPoly zero() { return EPoly(); }
  static EPoly one() { return EPoly(1); }
  static bool is_zero(const EPoly& c) { return c.is_zero(); }
  static EPoly scale_L(const EPoly& c, long k) { return c * EPoly::Lpow(Rat(k)); }
  static std::string str(const EPoly& c) { return "(" + c.str() + ")"; }
  static std::string latex(const EPoly& c) { return "(" + c.latex() + ")"; }
};

template <>
struct MRatTraits<EqClass> {
  static EqClass zero() { return EqClass(); }
  static EqClass one() { return EqClass(EPoly(1)); }
  static bool is_zero(const EqClass& c) { return c.is_zero(); }
  static EqClass scale_L(const EqClass& c, long k) { return c.scale(EPoly::Lpow(Rat(k))); }
  static std::string str(const EqClass& c) { return c.str(); }
  static std::string latex(const EqClass& c) { return c.latex(); }
};

inline long mono_total(const Mono& m) { return std::accumulate(m.begin(), m.end(), 0L); }

inline std::string tpow_text(const Mono& m, bool latex) {
  std::string out;
  int r = static_cast<int>(m.size());
  for (int j = 0; j < r; ++j) {
    if (m[j] == 0) continue;
    std::string var = r == 1 ? "T" : "T" + std::to_string(j + 1);
    std::string piece;
    if (m[j] == 1)
      piece = var;
    else if (latex)
      piece = var + "^{" + std::to_string(m[j]) + "}";
    else
      piece = var + "^" + std::to_string(m[j]);
    if (!out.empty()) out += latex ? "" : "*";
    out += piece;
  }
  return out;
}

inline std::string factor_text(const MRatFactor& f, bool latex) {
  std::string inner;
  if (f.nu != 0) {
    if (f.nu == 1)
      inner = "L";
    else if (latex)
      inner = "L^{" + std::to_string(f.nu) + "}";
    else
      inner = "L^" + std::to_string(f.nu);
  }
  Mono neg(f.N.size());
  for (size_t j = 0; j < f.N.size(); ++j) neg[j] = -f.N[j];
  std::string tp = tpow_text(neg, latex);
  if (!inner.empty() && !tp.empty()) inner += latex ? "" : "*";
  inner += tp;
  if (latex) return "(" + inner + "-1)^{-1}";
  return "(" + inner + "-1)^-1";
}

// Finite sum of terms  numerator(T) * prod_{f in F} (L^nu T^{-N} - 1)^{-1},
// with numerator a Laurent polynomial in T_1..T_r over the coefficient ring C.
template <class C>
class MRat {
public:
  using Traits = MRatTraits<C>;
  using Num = std::map<Mono, C>;

  explicit MRat(int r = 1) : r_(r) {}

  int r() const { return r_; }
  const std::map<FactorSet, Num>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  static MRat constant(int r, const C& c) {
    MRat m(r);
    m.add_term(FactorSet{}, Mono(r, 0), c);
    return m;
  }

  void add_term(const FactorSet& fs, const Mono& mono, const C& c) {
    if (Traits::is_zero(c)) return;
    if (static_cast<int>(mono.size()) != r_)
      throw ValidationError("monomial arity mismatch");
    for (const auto& f : fs) {
      if (static_cast<int>(f.N.size()) != r_)
        throw ValidationError("factor arity mismatch");
      bool any = false;
      for (long n : f.N) {
        if (n < 0) throw ValidationError("factor exponents must be nonnegative");
        if (n > 0) any = true;
      }
      if (!any) throw ValidationError("factor must involve at least one T");
    }
    auto& num = terms_[fs];
    auto it = num.find(mono);
    if (it == num.end()) {
      num.emplace(mono, c);
    } else {
      it->second = it->second + c;
      if (Traits::is_zero(it->second)) num.erase(it);
    }
    if (num.empty()) terms_.erase(fs);
  }

  MRat& operator+=(const MRat& o) {
    check_arity(o);
    for (const auto& [fs, num] : o.terms_)
      for (const auto& [m, c] : num) add_term(fs, m, c);
    return *this;
  }

  MRat operator-() const {
    MRat out(r_);
    for (const auto& [fs, num] : terms_)
      for (const auto& [m, c] : num) out.add_term(fs, m, Traits::zero() - c);
    return out;
  }

  MRat& operator-=(const MRat& o) {
    check_arity(o);
    for (const auto& [fs, num] : o.terms_)
      for (const auto& [m, c] : num) add_term(fs, m, Traits::zero() - c);
    return *this;
  }

  friend MRat operator+(MRat a, const MRat& b) { a += b; return a; }
  friend MRat operator-(MRat a, const MRat& b) { a -= b; return a; }

  friend MRat operator*(const MRat& a, const MRat& b) {
    a.check_arity(b);
    MRat out(a.r_);
    for (const auto& [fa, na] : a.terms_)
      for (const auto& [fb, nb] : b.terms_) {
        FactorSet fs = fa;
        fs.insert(fb.begin(), fb.end());
        for (const auto& [ma, ca] : na)
          for (const auto& [mb, cb] : nb) {
            Mono m(a.r_);
            for (int j = 0; j < a.r_; ++j) m[j] = ma[j] + mb[j];
            out.add_term(fs, m, ca * cb);
          }
      }
    return out;
  }

  MRat scale(const C& c) const {
    MRat out(r_);
    for (const auto& [fs, num] : terms_)
      for (const auto& [m, k] : num) out.add_term(fs, m, k * c);
    return out;
  }

  // Coefficients of all monomials with total degree <= K.
  std::map<Mono, C> expand(long K) const {
    std::map<Mono, C> out;
    for (const auto& [fs, num] : terms_) {
      std::map<Mono, C> cur;
      for (const auto& [m, c] : num)
        if (mono_total(m) <= K) cur[m] = c;
      for (const auto& f : fs) {
        if (cur.empty()) break;
        long totN = mono_total(f.N);
        std::map<Mono, C> next;
        for (const auto& [m, c] : cur) {
          long base = mono_total(m);
          for (long k = 1; base + k * totN <= K; ++k) {
            Mono nm(m);
            for (int j = 0; j < r_; ++j) nm[j] += k * f.N[j];
            C add = Traits::scale_L(c, -f.nu * k);
            auto it = next.find(nm);
            if (it == next.end()) {
              if (!Traits::is_zero(add)) next.emplace(nm, add);
            } else {
              it->second = it->second + add;
              if (Traits::is_zero(it->second)) next.erase(it);
            }
          }
        }
        cur = std::move(next);
      }
      for (const auto& [m, c] : cur) {
        auto it = out.find(m);
        if (it == out.end()) {
          if (!Traits::is_zero(c)) out.emplace(m, c);
        } else {
          it->second = it->second + c;
          if (Traits::is_zero(it->second)) out.erase(it);
        }
      }
    }
    return out;
  }

  // r = 1 convenience: series coefficient at T^n.
  C coefficient_at(long n) const {
    require_r1();
    auto e = expand(n);
    auto it = e.find(Mono{n});
    return it == e.end() ? Traits::zero() : it->second;
  }

  // Value as T -> infinity, via the substitution T = 1/z: every factor is a
  // regular power series in z with constant term -1; numerator powers T^k
  // become z^{-k}.  Throws NotRegularAtInfinity when a pole survives.
  C eval_infinity() const {
    require_r1();
    std::map<long, C> zc;  // z-exponent -> coefficient, kept for exponents <= 0
    for (const auto& [fs, num] : terms_) {
      long maxk = 0;
      bool any = false;
      for (const auto& [m, c] : num) {
        (void)c;
        maxk = any ? std::max(maxk, m[0]) : m[0];
        any = true;
      }
      if (!any) continue;
      if (maxk < 0) continue;  // vanishes at infinity
      // z-series of the factor product up to z^maxk
      std::vector<C> S(static_cast<size_t>(maxk) + 1, Traits::zero());
      S[0] = Traits::one();
      for (const auto& f : fs) {
        long N = f.N[0];
        std::vector<C> next(S.size(), Traits::zero());
        for (long m = 0; m <= maxk; ++m) {
          C acc = Traits::zero();
          for (long j = 0; j * N <= m; ++j) {
            acc = acc + Traits::scale_L(S[m - j * N], f.nu * j);
            if (N == 0) break;  // cannot happen (invariant), guard anyway
          }
          next[m] = Traits::zero() - acc;
        }
        S = std::move(next);
      }
      for (const auto& [m, c] : num) {
        long k = m[0];
        for (long mm = 0; mm <= maxk; ++mm) {
          long j = mm - k;
          if (j > 0) continue;
          C add = c * S[mm];
          auto it = zc.find(j);
          if (it == zc.end()) {
            if (!Traits::is_zero(add)) zc.emplace(j, add);
          } else {
            it->second = it->second + add;
            if (Traits::is_zero(it->second)) zc.erase(it);
          }
        }
      }
    }
    for (const auto& [j, c] : zc) {
      if (j < 0 && !Traits::is_zero(c))
        throw NotRegularAtInfinity("pole of order " + std::to_string(-j) +
                                   " at T = infinity");
    }
    auto it = zc.find(0);
    return it == zc.end() ? Traits::zero() : it->second;
  }

  // Exact equality by cross-multiplication against the union denominator.
  bool equals(const MRat& o) const {
    check_arity(o);
    std::map<MRatFactor, int> umult;
    auto collect = [&](const MRat& m) {
      for (const auto& [fs, num] : m.terms_) {
        (void)num;
        std::map<MRatFactor, int> local;
        for (const auto& f : fs) local[f]++;
        for (const auto& [f, k] : local) umult[f] = std::max(umult[f], k);
      }
    };
    collect(*this);
    collect(o);
    return cross_poly(umult) == o.cross_poly(umult);
  }

  std::string str() const { return text(false); }
  std::string latex() const { return text(true); }

private:
  void check_arity(const MRat& o) const {
    if (r_ != o.r_) throw ValidationError("mixed parameter counts");
  }
  void require_r1() const {
    if (r_ != 1) throw ValidationError("operation requires exactly one T parameter");
  }

  // Sum over terms of num * T^{sum N(F)} * prod_{f in U-F} (L^nu - T^N).
  Num cross_poly(const std::map<MRatFactor, int>& umult) const {
    Num acc;
    auto add_into = [&](Num& dst, const Mono& m, const C& c) {
      auto it = dst.find(m);
      if (it == dst.end()) {
        if (!Traits::is_zero(c)) dst.emplace(m, c);
      } else {
        it->second = it->second + c;
        if (Traits::is_zero(it->second)) dst.erase(it);
      }
    };
    for (const auto& [fs, num] : terms_) {
      // shift by sum of N over this term's own factors
      Mono shift(r_, 0);
      for (const auto& f : fs)
        for (int j = 0; j < r_; ++j) shift[j] += f.N[j];
      Num cur;
      for (const auto& [m, c] : num) {
        Mono nm(m);
        for (int j = 0; j < r_; ++j) nm[j] += shift[j];
        add_into(cur, nm, c);
      }
      // multiply by missing factors as polynomials (L^nu - T^N)
      std::map<MRatFactor, int> local;
      for (const auto& f : fs) local[f]++;
      for (const auto& [f, k] : umult) {
        int have = local.count(f) ? local.at(f) : 0;
        for (int rep = have; rep < k; ++rep) {
          Num next;
          for (const auto& [m, c] : cur) {
            add_into(next, m, Traits::scale_L(c, f.nu));
            Mono nm(m);
            for (int j = 0; j < r_; ++j) nm[j] += f.N[j];
            add_into(next, nm, Traits::zero() - c);
          }
          cur = std::move(next);
        }
      }
      for (const auto& [m, c] : cur) add_into(acc, m, c);
    }
    return acc;
  }

  std::string text(bool latex) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first_term = true;
    for (const auto& [fs, num] : terms_) {
      std::string numtext = "(";
      bool first = true;
      for (const auto& [m, c] : num) {
        if (!first) numtext += "+";
        first = false;
        numtext += latex ? Traits::latex(c) : Traits::str(c);
        std::string tp = tpow_text(m, latex);
        if (!tp.empty()) numtext += (latex ? "" : "*") + tp;
      }
      numtext += ")";
      for (const auto& f : fs) numtext += (latex ? "" : "*") + factor_text(f, latex);
      if (!first_term) out += "+";
      first_term = false;
      out += numtext;
    }
    return out;
  }

  int r_;
  std::map<FactorSet, Num> terms_;
};

// Fraction of classes; denominators stay in the subring generated by powers
// of uv, so the final division is exact_div.
struct EFrac {
  EPoly num;
  EPoly den = EPoly(1);

  bool is_zero() const { return num.is_zero(); }
  EFrac operator+(const EFrac& o) const { return {num * o.den + o.num * den, den * o.den}; }
  EFrac operator-(const EFrac& o) const { return {num * o.den - o.num * den, den * o.den}; }
  EFrac operator*(const EFrac& o) const { return {num * o.num, den * o.den}; }
  EFrac scaled(const EPoly& e) const { return {num * e, den}; }
  // Exact value; throws NonDivisible when the fraction is not polynomial.
  EPoly finalize() const {
    if (num.is_zero()) return EPoly();
    return num.exact_div(den);
  }
};

// Exact evaluation at T = 1 (r = 1).  Factors with nu = 0 force one exact
// division of the numerator by (T - 1) each (PoleAtOne on failure) and
// contribute a scalar 1/N; factors with nu != 0 contribute 1/(L^nu - 1).
inline EFrac mrat_eval_one(const MRat<EPoly>& m) {
  if (m.r() != 1) throw ValidationError("operation requires exactly one T parameter");
  EFrac acc{EPoly(), EPoly(1)};
  for (const auto& [fs, num] : m.terms()) {
    std::map<long, EPoly> poly;
    for (const auto& [mono, c] : num) poly[mono[0]] = c;
    Int scal = 1;
    int sign = 1;
    long shift = 0;
    std::vector<long> zero_Ns;
    EPoly epnum_extra(1);
    EPoly epden(1);
    for (const auto& f : fs) {
      long N = f.N[0];
      if (f.nu == 0) {
        zero_Ns.push_back(N);
        scal *= N;
        sign = -sign;
        shift += N;
      } else if (f.nu > 0) {
        epden *= EPoly::Lpow(Rat(f.nu)) - EPoly(1);
      } else {
        epnum_extra *= -EPoly::Lpow(Rat(-f.nu));
        epden *= EPoly::Lpow(Rat(-f.nu)) - EPoly(1);
      }
    }
    // numerator * prod(-T^N) over nu = 0 factors
    std::map<long, EPoly> cur;
    for (const auto& [e, c] : poly) {
      EPoly cc = sign < 0 ? -c : c;
      cur[e + shift] = cc;
    }
    // one (T-1) division per nu = 0 factor
    for (size_t rep = 0; rep < zero_Ns.size(); ++rep) {
      if (cur.empty()) break;
      // synthetic division, descending exponents
      std::map<long, EPoly> quot;
      EPoly carry;  // coefficient being propagated downward
      long hi = cur.rbegin()->first;
      long lo = cur.begin()->first;
      for (long e = hi; e > lo; --e) {
        EPoly ce = carry;
        auto it = cur.find(e);
        if (it != cur.end()) ce += it->second;
        if (!ce.is_zero()) quot[e - 1] = ce;
        carry = ce;
      }
      EPoly rem = carry;
      auto itlo = cur.find(lo);
      if (itlo != cur.end()) rem += itlo->second;
      if (!rem.is_zero()) throw PoleAtOne("pole at T = 1");
      cur = std::move(quot);
    }
    EPoly val;
    for (const auto& [e, c] : cur) {
      (void)e;
      val += c;
    }
    val = val * epnum_extra;
    EFrac term{val, epden * EPoly(scal)};
    acc = acc + term;
  }
  return acc;
}

// Divide a Laurent numerator by (L^nu T^{-N} - 1); returns true and the
// quotient when exact.
template <class C>
bool divide_by_factor(const std::map<long, C>& P, const MRatFactor& f,
                      std::map<long, C>& Q) {
  using Traits = MRatTraits<C>;
  Q.clear();
  if (P.empty()) return true;
  long N = f.N[0];
  long lo = P.begin()->first;
  long hi = P.rbegin()->first;
  for (long e = lo; e <= hi; ++e) {
    C pe = Traits::zero();
    auto ip = P.find(e);
    if (ip != P.end()) pe = ip->second;
    C qe = Traits::zero();
    auto iq = Q.find(e);
    if (iq != Q.end()) qe = iq->second;
    C val = pe + qe;
    if (!Traits::is_zero(val)) Q[e + N] = Traits::scale_L(val, -f.nu);
  }
  for (const auto& [e, c] : Q) {
    if (e > hi && !Traits::is_zero(c)) return false;
  }
  // verify: L^nu * Q(T^{-N} shift) - Q == P
  std::map<long, C> R;
  auto add_into = [&](long e, const C& c) {
    auto it = R.find(e);
    if (it == R.end()) {
      if (!Traits::is_zero(c)) R.emplace(e, c);
    } else {
      it->second = it->second + c;
      if (Traits::is_zero(it->second)) R.erase(it);
    }
  };
  for (const auto& [e, c] : Q) {
    add_into(e - N, Traits::scale_L(c, f.nu));
    add_into(e, Traits::zero() - c);
  }
  return R == P;
}

// Reconstruct an MRat (r = 1) from series coefficients h_0..h_K against a
// candidate factor multiset.  Applies the recurrence (P*f)_n =
// L^nu h_{n+N} - h_n per factor, reduces the numerator by any factors that
// divide it exactly, then verifies by re-expansion.
template <class C>
MRat<C> reconstruct_series(const std::vector<C>& h, const FactorSet& candidates) {
  using Traits = MRatTraits<C>;
  long K = static_cast<long>(h.size()) - 1;
  std::map<long, C> cur;
  for (long n = 0; n <= K; ++n)
    if (!Traits::is_zero(h[n])) cur[n] = h[n];
  long limit = K;
  long low = 0;  // support lower bound; drops by N per factor applied
  for (const auto& f : candidates) {
    long N = f.N[0];
    std::map<long, C> next;
    for (long n = low - N; n + N <= limit; ++n) {
      C hi = Traits::zero();
      auto it = cur.find(n + N);
      if (it != cur.end()) hi = it->second;
      C lo = Traits::zero();
      it = cur.find(n);
      if (it != cur.end()) lo = it->second;
      C val = Traits::scale_L(hi, f.nu) - lo;
      if (!Traits::is_zero(val)) next[n] = val;
    }
    limit -= N;
    low -= N;
    if (limit < 0)
      throw ReconstructionFailed("series too short for the candidate factors");
    cur = std::move(next);
  }
  // canonical reduction: strip candidate factors dividing the numerator
  FactorSet remaining = candidates;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = remaining.begin(); it != remaining.end(); ++it) {
      std::map<long, C> q;
      if (divide_by_factor(cur, *it, q)) {
        cur = std::move(q);
        remaining.erase(it);
        changed = true;
        break;
      }
    }
  }
  MRat<C> out(1);
  for (const auto& [e, c] : cur) out.add_term(remaining, Mono{e}, c);
  auto back = out.expand(K);
  for (long n = 0; n <= K; ++n) {
    auto it = back.find(Mono{n});
    C got = it == back.end() ? Traits::zero() : it->second;
    if (!(got == h[n]))
      throw ReconstructionFailed("series does not match any rational form over the candidate factors");
  }
  for (const auto& [m, c] : back) {
    (void)c;
    if (m[0] < 0 || m[0] > K)
      throw ReconstructionFailed("reconstructed form has unexpected support");
  }
  return out;
}

// Candidate factors for coefficientwise products: pairwise combinations
// (nu1 M/N1 + nu2 M/N2, M = lcm(N1, N2)) with multiplicity m1 + m2 - 1.
// Factors sharing an exponential rate at different periods -- (1,{1}) and
// (2,{2}) both decay like L^{-n} -- pool their multiplicities first, since
// the pole they describe is common.
inline FactorSet hadamard_candidates(const std::map<MRatFactor, int>& fa,
                                     const std::map<MRatFactor, int>& fb) {
  auto rate_total = [](const std::map<MRatFactor, int>& fs, const MRatFactor& f) {
    long g = std::gcd(f.nu, f.N[0]);
    long pn = f.nu / (g == 0 ? 1 : g), pd = f.N[0] / (g == 0 ? 1 : g);
    int total = 0;
    for (const auto& [o, m] : fs) {
      long og = std::gcd(o.nu, o.N[0]);
      if (o.nu / (og == 0 ? 1 : og) == pn && o.N[0] / (og == 0 ? 1 : og) == pd)
        total += m;
    }
    return total;
  };
  std::map<MRatFactor, int> cand;
  for (const auto& [f1, m1] : fa) {
    (void)m1;
    for (const auto& [f2, m2] : fb) {
      (void)m2;
      long N1 = f1.N[0], N2 = f2.N[0];
      long M = std::lcm(N1, N2);
      MRatFactor f{f1.nu * (M / N1) + f2.nu * (M / N2), {M}};
      int mult = rate_total(fa, f1) + rate_total(fb, f2) - 1;
      cand[f] = std::max(cand[f], mult);
    }
  }
  FactorSet out;
  for (const auto& [f, m] : cand)
    for (int i = 0; i < m; ++i) out.insert(f);
  return out;
}

template <class C>
std::map<MRatFactor, int> factor_multiplicities(const MRat<C>& m) {
  std::map<MRatFactor, int> out;
  for (const auto& [fs, num] : m.terms()) {
    (void)num;
    std::map<MRatFactor, int> local;
    for (const auto& f : fs) local[f]++;
    for (const auto& [f, k] : local) out[f] = std::max(out[f], k);
  }
  return out;
}

// Coefficientwise (Hadamard) product of two r = 1 series, reconstructed as a
// closed form and verified by re-expansion to order K.
template <class C>
MRat<C> hadamard(const MRat<C>& a, const MRat<C>& b, long K) {
  using Traits = MRatTraits<C>;
  if (a.r() != 1 || b.r() != 1)
    throw ValidationError("coefficientwise product requires one T parameter");
  auto ea = a.expand(K);
  auto eb = b.expand(K);
  for (const auto& [m, c] : ea) {
    (void)c;
    if (m[0] < 0) throw ValidationError("coefficientwise product requires nonnegative supports");
  }
  for (const auto& [m, c] : eb) {
    (void)c;
    if (m[0] < 0) throw ValidationError("coefficientwise product requires nonnegative supports");
  }
  std::vector<C> h(static_cast<size_t>(K) + 1, Traits::zero());
  for (long n = 0; n <= K; ++n) {
    auto ia = ea.find(Mono{n});
    auto ib = eb.find(Mono{n});
    if (ia != ea.end() && ib != eb.end()) h[n] = ia->second * ib->second;
  }
  FactorSet cands = hadamard_candidates(factor_multiplicities(a), factor_multiplicities(b));
  return reconstruct_series(h, cands);
}

}  // namespace motivica
