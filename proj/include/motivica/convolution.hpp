#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "motivica/mrat.hpp"

namespace motivica {

using Json = nlohmann::ordered_json;

// Character-zero augmentation of every numerator coefficient, factors kept.
MRat<EPoly> augmented_series(const MRat<EqClass>& m);

// (L-1) times the augmented series evaluated exactly at T = 1.
// PoleAtOne when the augmented series has a pole there.
EPoly measure_mass(const MRat<EqClass>& m);

// Coefficients 0..K of an equivariant measure's zeta function; the
// coefficient at order 0 must vanish and the support must be nonnegative.
std::vector<EqClass> measure_coefficients(const MRat<EqClass>& m, long K);

// First K coefficients of the additive convolution:
//   c_n = -qc(a_n, b_n) + (L-1) sum_{i<=n} L^{i-n} aug(a_i b_i)
//         + (L-1) (a_n * tail(b)_n + tail(a)_n * b_n),
// with tail(x)_n = sum_{i>n} aug(x_i) evaluated in closed form as
// (value at T = 1) minus the partial sum.
std::vector<EqClass> convolve_coefficients(const MRat<EqClass>& a,
                                           const MRat<EqClass>& b, long K);

// The convolution reconstructed to a closed rational form through order K.
MRat<EqClass> convolve(const MRat<EqClass>& a, const MRat<EqClass>& b, long K);

// Value at infinity of the convolution of two massless measures that are
// regular at infinity: quasi_conv(a(inf), b(inf)), cross-checked against the
// reconstructed convolution's own value at infinity.
EqClass ts_infinity(const MRat<EqClass>& a, const MRat<EqClass>& b, long K);

// JSON form of a measure zeta function:
//   { "r": 1, "terms": [ { "factors": [ {"nu": int, "N": [int...]}... ],
//                          "numerator": [ {"T": [int...], "coeff": str}... ] }... ] }
// with each coefficient in the canonical EqClass text form.
MRat<EqClass> measure_from_json(const Json& j);
Json measure_to_json(const MRat<EqClass>& m);

}  // namespace motivica
