#pragma once

#include "motivica/mrat.hpp"
#include "motivica/resolution.hpp"

namespace motivica {

enum class Mode { Local, Global };

// Contact-loci generating series: sum over selected strata of
// [E_I^o] * prod_{i in I} (L-1) (L^{nu_i} T^{-N_i} - 1)^{-1}.
// Local mode keeps only over-locus strata.
MRat<EPoly> contact_series(const Resolution& res, Mode mode);

// Normalized rational-points zeta: L^{-dim} times the contact-type sum; the
// local selector keeps strata that are over-locus or touch an exceptional
// component (matching the Igusa local selector).
MRat<EPoly> dl_zeta(const Resolution& res, Mode mode);

// Equivariant nearby-cycle series over the singular value: sum over
// over-locus strata of (L-1)^{|I|-1} [cover] prod (L^nu T^-N - 1)^{-1}.
MRat<EqClass> nearby_series(const Resolution& res);

// Limit classes.
EqClass psi_class(const Resolution& res);   // -S(infinity)
EqClass phi_class(const Resolution& res);   // psi minus its character-zero part

// t-spectrum of the vanishing class.
FracPoly spectrum_class(const Resolution& res);

// Arc-Euler characteristic at level n: sum over qualifying singleton strata
// (exceptional or over-locus) with N | n of N * chi(E^o).
Int lambda_n(const Resolution& res, long n);

// Monodromy zeta function prod (1 - t^N)^{-chi(E^o)} over qualifying
// singleton strata, gcd-reduced.
RatFun monodromy_zeta(const Resolution& res);

// Topological zeta function: sum over selected strata of
// chi(E_I^o) prod 1/(nu_i + s N_i).
SRational topological_zeta(const Resolution& res, Mode mode);

// chi-weighted discrepancy sum: sum over selected strata of
// chi(E_I^o) prod 1/nu_i  (the value of the class pushforward on Euler
// characteristics; equals the topological zeta at s = 0 when r = 1).
Rat euler_value(const Resolution& res, Mode mode);

// Class pushforward / stringy class: sum over all strata of
// [E_I^o] prod (L-1)/(L^{nu_i} - 1), with one exact division at the end.
EPoly stringy_class(const Resolution& res);

// Inclusion-exclusion form over closed strata: sum over subsets I of the
// nu >= 2 components of (-L)^{|I|} [closure of E_I] prod [P^{nu-2}]/[P^{nu-1}].
EPoly pushforward_closed(const Resolution& res);

// Igusa-type rational form in q and t (t = q^{-s}); requires counts on the
// selected strata.  Local selector: over-locus or touching an exceptional
// component.
QT igusa_zeta(const Resolution& res, Mode mode);

}  // namespace motivica
