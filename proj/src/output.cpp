#include "motivica/output.hpp"

#include <nlohmann/json.hpp>

#include "motivica/errors.hpp"

namespace motivica {

std::string render_result(const Result& r, const std::string& format) {
  if (format == "text") return r.text;
  if (format == "latex") return r.latex;
  if (format == "json") {
    nlohmann::ordered_json j;
    j["kind"] = r.kind;
    j["value"] = r.text;
    return j.dump();
  }
  throw ValidationError("unknown format '" + format + "'");
}

std::string tseries_str(const std::vector<EPoly>& coeffs, bool latex) {
  std::string out;
  for (size_t n = 0; n < coeffs.size(); ++n) {
    const EPoly& c = coeffs[n];
    if (c.is_zero()) continue;
    std::string ct = latex ? c.latex() : c.str();
    bool multi = c.terms().size() > 1;
    std::string piece;
    std::string tp;
    if (n == 1)
      tp = "T";
    else if (n > 1)
      tp = latex ? "T^{" + std::to_string(n) + "}" : "T^" + std::to_string(n);
    if (tp.empty()) {
      // the constant coefficient is always the first piece emitted
      out += ct;
      continue;
    }
    if (ct == "1") {
      piece = tp;
    } else if (ct == "-1") {
      piece = "-" + tp;
    } else if (multi) {
      piece = "(" + ct + ")" + (latex ? "" : "*") + tp;
    } else {
      piece = ct + (latex ? "" : "*") + tp;
    }
    if (!out.empty() && piece[0] != '-') piece = "+" + piece;
    out += piece;
  }
  if (out.empty()) return "0";
  return out;
}

std::string rational_latex(const Rat& r) {
  if (rat_is_integer(r)) return rat_str(r);
  std::string n = rat_num(r).get_str();
  std::string sign;
  if (!n.empty() && n[0] == '-') {
    sign = "-";
    n = n.substr(1);
  }
  return sign + "\\frac{" + n + "}{" + rat_den(r).get_str() + "}";
}

}  // namespace motivica
