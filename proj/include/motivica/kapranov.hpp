#pragma once

#include <string>
#include <utility>
#include <vector>

#include "motivica/epoly.hpp"

namespace motivica {

// E-classes of the symmetric powers Sym^0..Sym^K of a class with integer
// exponents, via the product formula prod_{p,q} (1 - u^p v^q T)^{-e_pq}
// (integral by construction).
std::vector<EPoly> sym_powers(const EPoly& e, long K);

// The same coefficients through the Adams/Newton recurrence
// n Z_n = sum_{k=1..n} psi_k(e) Z_{n-k} over Q; integrality of every
// coefficient is asserted (NonIntegralExpansion).
std::vector<EPoly> sym_powers_newton(const EPoly& e, long K);

// Adams operation psi_k: u -> u^k, v -> v^k.
EPoly adams(const EPoly& e, long k);

// Multiply the truncated series by prod (1 - u^a v^b T), in place of the
// denominator candidates; trailing zero coefficients are kept.
std::vector<EPoly> clear_factors(const std::vector<EPoly>& series,
                                 const std::vector<std::pair<long, long>>& factors);

// Accept when clear_factors yields a polynomial whose degree leaves at least
// one observed zero per candidate factor below the truncation order.
bool verify_rational(const std::vector<EPoly>& series,
                     const std::vector<std::pair<long, long>>& factors);

// Parse a product of candidate factors "(1-T)(1-u*v*T)..." into (a, b) pairs
// for the monomials u^a v^b.  Throws ParseError on any other shape.
std::vector<std::pair<long, long>> parse_curve_factors(const std::string& text);

// The class 1 - g u - g v + uv of a smooth projective genus-g curve.
EPoly genus_curve_class(long g);

// Numerator coefficients p_0..p_{2g} of Z = P(T)/((1-T)(1-uvT)),
// reconstructed from K >= 2g+2 series coefficients.
std::vector<EPoly> genus_numerator(long g, long K);

// Functional-equation check p_{2g-i} = L^{g-i} p_i for the genus-g curve.
bool functional_equation_check(long g, long K);

}  // namespace motivica
