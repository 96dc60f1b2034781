#pragma once

#include <map>
#include <string>

#include "motivica/epoly.hpp"
#include "motivica/unirings.hpp"

namespace motivica {

// Finite-order equivariant class: a finite sum of parts indexed by
// characters (rationals in [0,1)), each part a class in u, v.  The plain
// ring product adds characters modulo 1.
class EqClass {
public:
  using Parts = std::map<Rat, EPoly>;

  EqClass() = default;
  explicit EqClass(const EPoly& e) { set(Rat(0), e); }
  static EqClass part(const Rat& chr, const EPoly& e) {
    EqClass c;
    c.set(chr, e);
    return c;
  }

  void set(const Rat& chr, const EPoly& e);
  void add(const Rat& chr, const EPoly& e);
  const Parts& parts() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }
  bool operator==(const EqClass& o) const { return parts_ == o.parts_; }
  bool operator!=(const EqClass& o) const { return !(*this == o); }

  EqClass operator-() const;
  EqClass& operator+=(const EqClass& o);
  EqClass& operator-=(const EqClass& o);
  friend EqClass operator+(EqClass a, const EqClass& b) { a += b; return a; }
  friend EqClass operator-(EqClass a, const EqClass& b) { a -= b; return a; }
  friend EqClass operator*(const EqClass& a, const EqClass& b);
  EqClass scale(const EPoly& e) const;

  // The character-zero part.
  EPoly aug() const;
  // alpha -> -alpha (mod 1), parts unchanged.
  EqClass involute() const;
  // alpha -> -alpha (mod 1) with u <-> v in every part; this variant is a
  // homomorphism for the quasi-convolution product.
  EqClass involute_hodge() const;

  // Hodge specialization: the character-zero part passes through; a term
  // u^p v^q in the part at alpha in (0,1) becomes u^{p+alpha} v^{q+1-alpha}.
  // Every resulting term must satisfy p + q integral.
  EPoly spe() const;

  std::string str() const;
  std::string latex() const;

private:
  Parts parts_;
};

// Quasi-convolution product: characters add; away from character zero the
// cross terms pick up a factor v (when the character lift sum is below 1)
// or u (when above); opposite nonzero characters meet in uv at zero.
EqClass quasi_conv(const EqClass& a, const EqClass& b);

// Join: (L-1)*aug(a*b) - quasi_conv(a, b).
EqClass join(const EqClass& a, const EqClass& b);

// (L-1)*aug(a).
EPoly mapping_torus(const EqClass& a);

// t-spectrum of a Hodge specialization: collect t^p over terms u^p v^q.
FracPoly spectrum_poly(const EPoly& fracquodge);

// Parse the canonical text form "{0:1, 1/2:u}" (or "0").
EqClass parse_eqclass(const std::string& text);

}  // namespace motivica
