#pragma once

// Shared helpers for the test suite: deterministic random generators for
// coefficient classes and the fixtures-directory lookup used by tests that
// read JSON files from disk.

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "motivica/epoly.hpp"
#include "motivica/eqclass.hpp"

namespace testutil {

inline std::string fixtures_dir() {
  const char* env = std::getenv("MOTIVICA_FIXTURES");
  return env ? std::string(env) : std::string("fixtures");
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  long pick(long lo, long hi) {  // inclusive
    std::uniform_int_distribution<long> d(lo, hi);
    return d(gen);
  }
};

// Random Laurent polynomial with integer exponents in [-2, 3] and small
// integer coefficients; possibly zero.
inline motivica::EPoly random_epoly(Rng& r, int max_terms = 4) {
  motivica::EPoly e;
  int nterms = static_cast<int>(r.pick(0, max_terms));
  for (int i = 0; i < nterms; ++i) {
    long c = r.pick(-3, 3);
    if (c == 0) continue;
    e += motivica::EPoly::monomial(motivica::Rat(r.pick(-2, 3)),
                                   motivica::Rat(r.pick(-2, 3)),
                                   motivica::Int(c));
  }
  return e;
}

// Random nonzero polynomial in integer powers of uv (valid exact_div divisor).
inline motivica::EPoly random_uv_poly(Rng& r, int max_terms = 3) {
  motivica::EPoly e;
  int nterms = static_cast<int>(r.pick(1, max_terms));
  for (int i = 0; i < nterms; ++i) {
    long c = r.pick(-3, 3);
    if (c == 0) continue;
    e += motivica::EPoly::Lpow(motivica::Rat(r.pick(-1, 3))) * motivica::EPoly(c);
  }
  if (e.is_zero()) e = motivica::EPoly(1) + motivica::EPoly::L();
  return e;
}

// Characters with denominators dividing 6 (the torsion orders exercised by
// the shipped fixtures).
inline motivica::Rat random_character(Rng& r) {
  static const std::pair<long, long> chars[] = {
      {0, 1}, {1, 6}, {1, 3}, {1, 2}, {2, 3}, {5, 6}};
  auto [n, d] = chars[r.pick(0, 5)];
  return motivica::Rat(n, d);
}

// Random equivariant class with parts over sixth-root characters and
// integer-exponent coefficient polynomials.
inline motivica::EqClass random_eqclass(Rng& r, int max_parts = 3) {
  motivica::EqClass c;
  int nparts = static_cast<int>(r.pick(0, max_parts));
  for (int i = 0; i < nparts; ++i) c.add(random_character(r), random_epoly(r, 3));
  return c;
}

}  // namespace testutil
