#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "motivica/rat.hpp"

namespace motivica {

// Sparse univariate polynomials: exponent -> coefficient.
using ZPoly = std::map<long, Int>;   // over Z
using QPoly = std::map<long, Rat>;   // over Q
// Polynomial with rational exponents (spectra and weight polynomials).
using FracPoly = std::map<Rat, Int>;

ZPoly zp_one();
ZPoly zp_monomial(long e, const Int& c);
void zp_add_term(ZPoly& p, long e, const Int& c);
ZPoly zp_add(const ZPoly& a, const ZPoly& b);
ZPoly zp_mul(const ZPoly& a, const ZPoly& b);
ZPoly zp_neg(const ZPoly& a);
ZPoly zp_pow(const ZPoly& a, long k);
Rat zp_eval(const ZPoly& p, const Rat& x);
bool zp_is_zero(const ZPoly& p);
// implicit_mult: "6s" instead of "6*s" (used for s-rational display).
std::string zp_str(const ZPoly& p, const std::string& var, bool implicit_mult = false);
std::string zp_latex(const ZPoly& p, const std::string& var);

QPoly qp_from_zp(const ZPoly& a);
QPoly qp_add(const QPoly& a, const QPoly& b);
QPoly qp_sub(const QPoly& a, const QPoly& b);
QPoly qp_mul(const QPoly& a, const QPoly& b);
// Euclidean division; requires b != 0.
void qp_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
// Monic gcd over Q (1 when coprime).
QPoly qp_gcd(QPoly a, QPoly b);
bool qp_is_zero(const QPoly& p);
Rat qp_eval(const QPoly& p, const Rat& x);

std::string fracpoly_str(const FracPoly& p, const std::string& var);
std::string fracpoly_latex(const FracPoly& p, const std::string& var);

// Reduced ratio of integer polynomials in one variable (monodromy zeta
// functions and numeric specializations).  Canonical form: gcd-reduced,
// contents coprime, and the denominator's lowest-degree coefficient positive.
struct RatFun {
  ZPoly num;
  ZPoly den;
  std::string var = "t";

  static RatFun make(const QPoly& n, const QPoly& d, const std::string& var);
  bool operator==(const RatFun& o) const { return num == o.num && den == o.den; }
  std::string str() const;
  std::string latex() const;
};

// Rational function of s with denominator split into a positive integer
// scalar and primitive linear factors a + b*s (the shape produced by
// topological zeta functions of one polynomial).
struct SRational {
  ZPoly num;                                // in s
  Int scal = 1;                             // positive
  std::vector<std::pair<Int, Int>> factors; // (a, b), primitive, sorted

  // n/d with d known to split into linear factors from `candidates`
  // (pairs (a,b)); anything left over must be constant.
  static SRational make(const QPoly& n, const QPoly& d,
                        const std::vector<std::pair<Int, Int>>& candidates);
  Rat eval(const Rat& s) const;
  bool operator==(const SRational& o) const = default;
  std::string str() const;
  std::string latex() const;
};

// Rational form in q and t with denominator q^qpow * prod (q^nu - t^N)
// (Igusa-type local zeta functions; t stands for q^{-s}).
struct QT {
  // numerator: (q-exponent, t-exponent) -> coefficient; q-exponents >= 0
  std::map<std::pair<long, long>, Int> num;
  long qpow = 0;
  std::multiset<std::pair<long, long>> factors;  // (nu, N), ascending

  void add_num(long qe, long te, const Int& c);
  // Cancel shared q-powers and any denominator factor dividing the numerator.
  void canonicalize();
  bool operator==(const QT& o) const = default;
  // Coefficients of t^0..t^K as Laurent polynomials in q.
  std::vector<std::map<long, Int>> t_series(long K) const;
  // Substitute a numeric q; returns a reduced rational function of t.
  RatFun substitute_q(const Rat& q) const;
  std::string str() const;
  std::string latex() const;
};

}  // namespace motivica
