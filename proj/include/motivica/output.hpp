#pragma once

#include <string>
#include <vector>

#include "motivica/epoly.hpp"

namespace motivica {

// One computed result: a stable kind tag plus the canonical text and LaTeX
// renderings of the value.
struct Result {
  std::string kind;
  std::string text;
  std::string latex;
};

// format is one of text | json | latex.  The JSON form is the single compact
// object {"kind": ..., "value": <canonical text>}.
std::string render_result(const Result& r, const std::string& format);

// A truncated T-series with class coefficients, for display:
// coefficients with more than one term (or a negative lead) are
// parenthesized, e.g. "1+(-u-v)*T+u*v*T^2".
std::string tseries_str(const std::vector<EPoly>& coeffs, bool latex);

// "p" / "p/q" in text, "\frac{p}{q}" in LaTeX.
std::string rational_latex(const Rat& r);

}  // namespace motivica
