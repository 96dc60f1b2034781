#pragma once

#include <map>
#include <set>
#include <string>

#include "motivica/epoly.hpp"
#include "motivica/rat.hpp"

namespace motivica {

// Variable-agnostic polynomial produced by the expression parser: a sum of
// integer-coefficient monomials with rational exponents in named variables.
struct GPoly {
  using Mono = std::map<std::string, Rat>;  // variable -> exponent (never 0)
  std::map<Mono, Int> terms;                // monomial -> coefficient (never 0)

  void add(const Mono& m, const Int& c);
  GPoly operator-() const;
  GPoly& operator+=(const GPoly& o);
  GPoly& operator-=(const GPoly& o);
  friend GPoly operator*(const GPoly& a, const GPoly& b);
  GPoly pow_rat(const Rat& k) const;  // fractional/negative only for monomials
  std::set<std::string> variables() const;
};

// Grammar: sums/differences of products of powers; explicit '*' or
// juxtaposition for products; '^' with integer or parenthesized rational
// exponents; parentheses; integer literals; identifiers as variables.
// Whitespace is insignificant.  Throws ParseError.
GPoly parse_poly_expr(const std::string& text);

// "p" or "p/q" (optional leading '-'); canonicalizes.  Throws ParseError.
Rat parse_rational(const std::string& text);

// A character: rational in [0,1) that must be written in lowest terms
// ("3/6" is rejected).  Throws ParseError.
Rat parse_character(const std::string& text);

// Conversion into u,v-land: allowed variables u, v, L (L = u*v).
EPoly gpoly_to_epoly(const GPoly& g, const std::string& what);

// Conversion into a univariate Laurent polynomial in `var`; exponents must
// be integers (and nonnegative unless allow_negative).
std::map<long, Int> gpoly_to_uni(const GPoly& g, const std::string& var,
                                 bool allow_negative, const std::string& what);

}  // namespace motivica
