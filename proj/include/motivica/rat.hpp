#pragma once

#include <gmpxx.h>

#include <string>

#include "motivica/errors.hpp"

namespace motivica {

using Int = mpz_class;
using Rat = mpq_class;

inline Int rat_num(const Rat& r) { return r.get_num(); }
inline Int rat_den(const Rat& r) { return r.get_den(); }

inline bool rat_is_integer(const Rat& r) { return rat_den(r) == 1; }

// Canonical text for a rational: "p" when integral, "p/q" otherwise.
inline std::string rat_str(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  if (rat_is_integer(c)) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline std::string int_str(const Int& z) { return z.get_str(); }

// Floor of a rational as an integer.
inline Int rat_floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

// Fractional part in [0, 1).
inline Rat rat_frac(const Rat& r) {
  Rat f = r - Rat(rat_floor(r));
  f.canonicalize();
  return f;
}

// Reduce a rational modulo 1 into [0, 1).  (Same as rat_frac; named for
// readability at call sites dealing with equivariant characters.)
inline Rat mod1(const Rat& r) { return rat_frac(r); }

inline Int int_gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline long to_long(const Int& z, const char* what) {
  if (!z.fits_slong_p()) throw ValidationError(std::string(what) + " out of range");
  return z.get_si();
}

// Exact integer division; callers must know divisibility holds.
inline Int int_exact_div(const Int& a, const Int& b) {
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) throw NonDivisible("integer division with remainder");
  return q;
}

}  // namespace motivica
