#pragma once

#include <map>
#include <string>
#include <vector>

#include "motivica/rat.hpp"

namespace motivica {

// Bidegree of a monomial u^p v^q with rational exponents.
struct Expo {
  Rat p;
  Rat q;
  bool operator==(const Expo& o) const { return p == o.p && q == o.q; }
};

// Canonical term order: ascending total degree p+q, then ascending p.
struct ExpoLess {
  bool operator()(const Expo& a, const Expo& b) const {
    Rat ta = a.p + a.q;
    Rat tb = b.p + b.q;
    if (ta != tb) return ta < tb;
    return a.p < b.p;
  }
};

// Laurent polynomial in u, v with integer coefficients and rational
// exponents (group ring of Q^2 over Z).  The class of the affine line is
// L = u*v.  Zero terms are never stored; the map order is the canonical
// print order.
class EPoly {
public:
  using Terms = std::map<Expo, Int, ExpoLess>;

  EPoly() = default;
  EPoly(long c) { add_term(Rat(0), Rat(0), Int(c)); }
  explicit EPoly(const Int& c) { add_term(Rat(0), Rat(0), c); }

  static EPoly monomial(const Rat& p, const Rat& q, const Int& c = Int(1));
  static EPoly u_var() { return monomial(1, 0); }
  static EPoly v_var() { return monomial(0, 1); }
  static EPoly L() { return monomial(1, 1); }
  // (uv)^k for rational k.
  static EPoly Lpow(const Rat& k) { return monomial(k, k); }
  // 1 + L + ... + L^{n-1}, the class of projective (n-1)-space.
  static EPoly projective_space(long n);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const Terms& terms() const { return terms_; }

  void add_term(const Rat& p, const Rat& q, const Int& c);
  Int coeff(const Rat& p, const Rat& q) const;

  EPoly operator-() const;
  EPoly& operator+=(const EPoly& o);
  EPoly& operator-=(const EPoly& o);
  friend EPoly operator+(EPoly a, const EPoly& b) { a += b; return a; }
  friend EPoly operator-(EPoly a, const EPoly& b) { a -= b; return a; }
  friend EPoly operator*(const EPoly& a, const EPoly& b);
  EPoly& operator*=(const EPoly& o) { *this = *this * o; return *this; }
  // k >= 0 for general operands; k < 0 permitted only for single monomials.
  EPoly pow(long k) const;
  bool operator==(const EPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const EPoly& o) const { return !(*this == o); }

  // u <-> v.
  EPoly swap_uv() const;
  // u = v = 1.
  Int euler() const;
  // u, v -> w; returns exponent-of-w -> coefficient.
  std::map<Rat, Int> weight() const;
  // v -> u^{-1} (reduction modulo L - 1); returns exponent-of-u -> coefficient.
  std::map<Rat, Int> subs_v_uinv() const;
  // Requires every term to be a power of uv (p == q); returns that power -> coefficient.
  // Throws NonTateClass otherwise.
  std::map<Rat, Int> diagonal_exponents() const;

  // True when every term has p == q (a polynomial in fractional powers of uv).
  bool is_uv_univariate() const;
  // Least common multiple of all exponent denominators (>= 1).
  Int denominator_bound() const;

  // Exact division; the divisor must be univariate in a fractional power of
  // uv and the quotient must have integer coefficients.  Throws NonDivisible.
  EPoly exact_div(const EPoly& b) const;

  std::string str() const;
  std::string latex() const;

private:
  Terms terms_;
};

inline EPoly operator*(long c, const EPoly& p) { return EPoly(c) * p; }

}  // namespace motivica
