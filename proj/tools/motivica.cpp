#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "motivica/convolution.hpp"
#include "motivica/errors.hpp"
#include "motivica/kapranov.hpp"
#include "motivica/mckay.hpp"
#include "motivica/output.hpp"
#include "motivica/resolution.hpp"
#include "motivica/textio.hpp"
#include "motivica/zeta.hpp"

namespace fs = std::filesystem;
using namespace motivica;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json_file(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
}

Mode parse_mode(const std::string& mode) {
  if (mode == "local") return Mode::Local;
  if (mode == "global") return Mode::Global;
  throw ValidationError("mode must be 'local' or 'global'");
}

struct ResSource {
  std::string input;
  std::string fixture;
};

void add_res_options(CLI::App* cmd, ResSource& src) {
  cmd->add_option("--input", src.input,
                  "resolution JSON file (a directory runs every *.json inside)");
  cmd->add_option("--fixture", src.fixture, "built-in fixture name");
}

Resolution load_single(const ResSource& s) {
  if (!s.input.empty() && !s.fixture.empty())
    throw ValidationError("give --input or --fixture, not both");
  if (!s.fixture.empty()) return builtin_fixture(s.fixture);
  if (s.input.empty())
    throw ValidationError("a resolution is required: --input FILE or --fixture NAME");
  return resolution_from_json(parse_json_file(s.input));
}

// Runs `op` on one resolution, or on every *.json file when --input is a
// directory; batch outputs are prefixed per file and errors keep going.
int run_resolution_command(const ResSource& src, const std::string& format,
                           const std::function<Result(const Resolution&)>& op) {
  if (!src.input.empty() && fs::is_directory(src.input)) {
    if (!src.fixture.empty())
      throw ValidationError("give --input or --fixture, not both");
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(src.input))
      if (e.is_regular_file() && e.path().extension() == ".json")
        files.push_back(e.path());
    std::sort(files.begin(), files.end());
    if (files.empty())
      throw ValidationError("directory '" + src.input + "' contains no .json files");
    int worst = 0;
    for (const auto& f : files) {
      try {
        Resolution res = resolution_from_json(parse_json_file(f.string()));
        Result r = op(res);
        if (format == "json") {
          nlohmann::ordered_json j;
          j["file"] = f.filename().string();
          j["kind"] = r.kind;
          j["value"] = r.text;
          std::cout << j.dump() << "\n";
        } else {
          std::cout << "# " << f.filename().string() << "\n"
                    << render_result(r, format) << "\n";
        }
      } catch (const Error& e) {
        std::cerr << "error in " << f.filename().string() << ": " << e.name()
                  << ": " << e.what() << "\n";
        worst = std::max(worst, e.exit_code());
      }
    }
    return worst;
  }
  Result r = op(load_single(src));
  std::cout << render_result(r, format) << "\n";
  return 0;
}

AbelianGroup load_group(const std::string& spec) {
  if (fs::exists(spec) && fs::is_regular_file(spec))
    return group_from_json(parse_json_file(spec));
  return builtin_group(spec);
}

struct MeasureSource {
  std::string measure;
  std::string input;
  std::string fixture;
};

MRat<EqClass> load_measure(const MeasureSource& s, const std::string& side) {
  int given = (s.measure.empty() ? 0 : 1) + (s.input.empty() ? 0 : 1) +
              (s.fixture.empty() ? 0 : 1);
  if (given == 0)
    throw ValidationError("missing " + side +
                          " measure: give --measure" + (side == "second" ? "2" : "") +
                          " FILE, --input" + (side == "second" ? "2" : "") +
                          " FILE, or --fixture" + (side == "second" ? "2" : "") + " NAME");
  if (given > 1)
    throw ValidationError("the " + side + " measure was given more than once");
  if (!s.measure.empty()) return measure_from_json(parse_json_file(s.measure));
  Resolution res = s.fixture.empty()
                       ? resolution_from_json(parse_json_file(s.input))
                       : builtin_fixture(s.fixture);
  return nearby_series(res);
}

std::string eqclass_table(const std::vector<EqClass>& coeffs, bool latex) {
  std::string out;
  for (size_t n = 1; n < coeffs.size(); ++n) {
    if (!out.empty()) out += latex ? " \\\\\n" : "\n";
    out += std::to_string(n) + ": " + (latex ? coeffs[n].latex() : coeffs[n].str());
  }
  return out;
}

std::string epoly_table(const std::vector<EPoly>& coeffs, bool latex) {
  std::string out;
  for (size_t n = 0; n < coeffs.size(); ++n) {
    if (!out.empty()) out += latex ? " \\\\\n" : "\n";
    out += std::to_string(n) + ": " + (latex ? coeffs[n].latex() : coeffs[n].str());
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "motivica: exact zeta functions, nearby-cycle classes, spectra, and "
      "orbifold invariants from resolution data"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "latex"}))
      ->capture_default_str();

  // ---- subcommand state ----
  ResSource zeta_src, nearby_src, vanishing_src, spectrum_src, topzeta_src;
  ResSource igusa_src, dlzeta_src, monodromy_src, acampo_src, pushforward_src;
  ResSource validate_src, mckay_src;
  std::string zeta_mode = "global", topzeta_mode = "local", igusa_mode = "global";
  std::string dlzeta_mode = "global", pushforward_mode = "global";
  bool nearby_series_flag = false;
  long nearby_order = -1;
  std::string igusa_q;
  long acampo_n = -1;
  std::string pushforward_form = "open";
  MeasureSource conv_a, conv_b;
  bool conv_ts = false;
  long conv_order = 12;
  std::string mckay_group;
  std::string kap_epoly, kap_factors;
  long kap_genus = -1, kap_order = 8;

  CLI::App* cmd_zeta = app.add_subcommand(
      "zeta", "motivic zeta function of the contact loci (closed rational form)");
  add_res_options(cmd_zeta, zeta_src);
  cmd_zeta->add_option("--mode", zeta_mode, "stratum selection")
      ->check(CLI::IsMember({"local", "global"}))
      ->capture_default_str();

  CLI::App* cmd_nearby = app.add_subcommand(
      "nearby", "nearby-cycle class (default) or its equivariant zeta series");
  add_res_options(cmd_nearby, nearby_src);
  cmd_nearby->add_flag("--series", nearby_series_flag,
                       "print the closed-form series instead of the limit class");
  cmd_nearby->add_option("--order", nearby_order,
                         "with --series: print coefficients 1..K instead");

  CLI::App* cmd_vanishing =
      app.add_subcommand("vanishing", "vanishing-cycle class");
  add_res_options(cmd_vanishing, vanishing_src);

  CLI::App* cmd_spectrum =
      app.add_subcommand("spectrum", "Hodge spectrum of the vanishing class");
  add_res_options(cmd_spectrum, spectrum_src);

  CLI::App* cmd_topzeta =
      app.add_subcommand("topzeta", "topological zeta function in s");
  add_res_options(cmd_topzeta, topzeta_src);
  cmd_topzeta->add_option("--mode", topzeta_mode, "stratum selection")
      ->check(CLI::IsMember({"local", "global"}))
      ->capture_default_str();

  CLI::App* cmd_igusa = app.add_subcommand(
      "igusa", "Igusa-type zeta function in q and t = q^-s (needs counts)");
  add_res_options(cmd_igusa, igusa_src);
  cmd_igusa->add_option("--mode", igusa_mode, "stratum selection")
      ->check(CLI::IsMember({"local", "global"}))
      ->capture_default_str();
  cmd_igusa->add_option("--q", igusa_q, "substitute a numeric q (rational)");

  CLI::App* cmd_dlzeta = app.add_subcommand(
      "dlzeta", "normalized rational-points zeta function (L^-dim scaled)");
  add_res_options(cmd_dlzeta, dlzeta_src);
  cmd_dlzeta->add_option("--mode", dlzeta_mode, "stratum selection")
      ->check(CLI::IsMember({"local", "global"}))
      ->capture_default_str();

  CLI::App* cmd_monodromy =
      app.add_subcommand("monodromy", "monodromy zeta function in t");
  add_res_options(cmd_monodromy, monodromy_src);

  CLI::App* cmd_acampo = app.add_subcommand(
      "acampo", "arc-Euler characteristics Lambda_n (table 1..12 or --n)");
  add_res_options(cmd_acampo, acampo_src);
  cmd_acampo->add_option("--n", acampo_n, "single level n >= 1");

  CLI::App* cmd_pushforward = app.add_subcommand(
      "pushforward", "class pushforward of the resolution (stringy form)");
  add_res_options(cmd_pushforward, pushforward_src);
  cmd_pushforward->add_option("--mode", pushforward_mode, "stratum selection")
      ->check(CLI::IsMember({"local", "global"}))
      ->capture_default_str();
  cmd_pushforward->add_option("--form", pushforward_form, "open or closed strata")
      ->check(CLI::IsMember({"open", "closed"}))
      ->capture_default_str();

  CLI::App* cmd_convolve = app.add_subcommand(
      "convolve", "additive convolution of two measures (Thom-Sebastiani engine)");
  cmd_convolve->add_option("--measure", conv_a.measure, "first measure JSON file");
  cmd_convolve->add_option("--input", conv_a.input, "first resolution JSON file");
  cmd_convolve->add_option("--fixture", conv_a.fixture, "first built-in fixture");
  cmd_convolve->add_option("--measure2", conv_b.measure, "second measure JSON file");
  cmd_convolve->add_option("--input2", conv_b.input, "second resolution JSON file");
  cmd_convolve->add_option("--fixture2", conv_b.fixture, "second built-in fixture");
  cmd_convolve->add_flag("--ts", conv_ts,
                         "value at infinity (abstract Thom-Sebastiani) instead");
  cmd_convolve->add_option("--order", conv_order, "reconstruction order")
      ->capture_default_str();

  CLI::App* cmd_mckay = app.add_subcommand(
      "mckay", "orbifold weight of a finite diagonal action; with a "
               "resolution, compare against its stringy class");
  cmd_mckay->add_option("--group", mckay_group, "group JSON file or built-in name")
      ->required();
  add_res_options(cmd_mckay, mckay_src);

  CLI::App* cmd_kapranov = app.add_subcommand(
      "kapranov", "symmetric-power zeta series of a class");
  cmd_kapranov->add_option("--epoly", kap_epoly, "class in u, v (and L = u*v)");
  cmd_kapranov->add_option("--genus", kap_genus,
                           "genus-g curve class; checks the functional equation");
  cmd_kapranov->add_option("--factors", kap_factors,
                           "candidate denominator, a product of (1-u^a*v^b*T)");
  cmd_kapranov->add_option("--order", kap_order, "truncation order")
      ->capture_default_str();

  CLI::App* cmd_validate =
      app.add_subcommand("validate", "validate resolution data");
  add_res_options(cmd_validate, validate_src);

  CLI::App* cmd_fixtures =
      app.add_subcommand("fixtures", "list built-in fixtures and groups");

  // Let --format appear after the subcommand as well as before it.
  for (CLI::App* sc : {cmd_zeta, cmd_nearby, cmd_vanishing, cmd_spectrum,
                       cmd_topzeta, cmd_igusa, cmd_dlzeta, cmd_monodromy,
                       cmd_acampo, cmd_pushforward, cmd_convolve, cmd_mckay,
                       cmd_kapranov, cmd_validate, cmd_fixtures})
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (cmd_zeta->parsed()) {
      Mode mode = parse_mode(zeta_mode);
      return run_resolution_command(zeta_src, format, [&](const Resolution& res) {
        MRat<EPoly> z = contact_series(res, mode);
        return Result{"contact_zeta", z.str(), z.latex()};
      });
    }
    if (cmd_nearby->parsed()) {
      if (nearby_order >= 0 && !nearby_series_flag)
        throw ValidationError("--order requires --series");
      return run_resolution_command(nearby_src, format, [&](const Resolution& res) {
        if (!nearby_series_flag) {
          EqClass psi = psi_class(res);
          return Result{"nearby_class", psi.str(), psi.latex()};
        }
        MRat<EqClass> s = nearby_series(res);
        if (nearby_order < 0) return Result{"nearby_zeta", s.str(), s.latex()};
        auto coeffs = measure_coefficients(s, nearby_order);
        return Result{"nearby_coefficients", eqclass_table(coeffs, false),
                      eqclass_table(coeffs, true)};
      });
    }
    if (cmd_vanishing->parsed()) {
      return run_resolution_command(vanishing_src, format, [&](const Resolution& res) {
        EqClass phi = phi_class(res);
        return Result{"vanishing_class", phi.str(), phi.latex()};
      });
    }
    if (cmd_spectrum->parsed()) {
      return run_resolution_command(spectrum_src, format, [&](const Resolution& res) {
        FracPoly sp = spectrum_class(res);
        return Result{"spectrum", fracpoly_str(sp, "t"), fracpoly_latex(sp, "t")};
      });
    }
    if (cmd_topzeta->parsed()) {
      Mode mode = parse_mode(topzeta_mode);
      return run_resolution_command(topzeta_src, format, [&](const Resolution& res) {
        SRational z = topological_zeta(res, mode);
        return Result{"topological_zeta", z.str(), z.latex()};
      });
    }
    if (cmd_igusa->parsed()) {
      Mode mode = parse_mode(igusa_mode);
      return run_resolution_command(igusa_src, format, [&](const Resolution& res) {
        QT z = igusa_zeta(res, mode);
        if (igusa_q.empty()) return Result{"igusa_zeta", z.str(), z.latex()};
        RatFun at = z.substitute_q(parse_rational(igusa_q));
        return Result{"igusa_at_q", at.str(), at.latex()};
      });
    }
    if (cmd_dlzeta->parsed()) {
      Mode mode = parse_mode(dlzeta_mode);
      return run_resolution_command(dlzeta_src, format, [&](const Resolution& res) {
        MRat<EPoly> z = dl_zeta(res, mode);
        return Result{"dl_zeta", z.str(), z.latex()};
      });
    }
    if (cmd_monodromy->parsed()) {
      return run_resolution_command(monodromy_src, format, [&](const Resolution& res) {
        RatFun z = monodromy_zeta(res);
        return Result{"monodromy_zeta", z.str(), z.latex()};
      });
    }
    if (cmd_acampo->parsed()) {
      return run_resolution_command(acampo_src, format, [&](const Resolution& res) {
        if (acampo_n >= 1) {
          Int v = lambda_n(res, acampo_n);
          return Result{"acampo_lambda", int_str(v), int_str(v)};
        }
        if (acampo_n != -1) throw ValidationError("--n must be >= 1");
        std::string text, latex;
        for (long n = 1; n <= 12; ++n) {
          Int v = lambda_n(res, n);
          if (!text.empty()) {
            text += "\n";
            latex += " \\\\\n";
          }
          text += std::to_string(n) + ": " + int_str(v);
          latex += "\\Lambda_{" + std::to_string(n) + "} = " + int_str(v);
        }
        return Result{"acampo_table", text, latex};
      });
    }
    if (cmd_pushforward->parsed()) {
      Mode mode = parse_mode(pushforward_mode);
      bool closed = pushforward_form == "closed";
      return run_resolution_command(pushforward_src, format, [&](const Resolution& res) {
        if (mode == Mode::Local) {
          Rat v = euler_value(res, Mode::Local);
          return Result{"euler_value", rat_str(v), rational_latex(v)};
        }
        EPoly c = closed ? pushforward_closed(res) : stringy_class(res);
        return Result{closed ? "pushforward_closed" : "pushforward", c.str(),
                      c.latex()};
      });
    }
    if (cmd_convolve->parsed()) {
      MRat<EqClass> a = load_measure(conv_a, "first");
      MRat<EqClass> b = load_measure(conv_b, "second");
      if (conv_order < 1) throw ValidationError("--order must be >= 1");
      Result r;
      if (conv_ts) {
        EqClass v = ts_infinity(a, b, conv_order);
        r = Result{"ts_infinity", v.str(), v.latex()};
      } else {
        MRat<EqClass> c = convolve(a, b, conv_order);
        r = Result{"convolution", c.str(), c.latex()};
      }
      std::cout << render_result(r, format) << "\n";
      return 0;
    }
    if (cmd_mckay->parsed()) {
      AbelianGroup g = load_group(mckay_group);
      if (mckay_src.input.empty() && mckay_src.fixture.empty()) {
        EPoly w = orbifold_weight(g);
        Result r{"orbifold_weight", w.str(), w.latex()};
        std::cout << render_result(r, format) << "\n";
        return 0;
      }
      return run_resolution_command(mckay_src, format, [&](const Resolution& res) {
        McKayReport rep = mckay_compare(g, res);
        std::string text = rep.equal ? "equal: true" : "equal: false";
        std::string latex = text;
        if (!rep.equal) {
          text += "\ndifference: " + rep.difference.str();
          latex += " \\\\\ndifference: " + rep.difference.latex();
        }
        return Result{"mckay_compare", text, latex};
      });
    }
    if (cmd_kapranov->parsed()) {
      if (!kap_epoly.empty() && kap_genus >= 0)
        throw ValidationError("give --epoly or --genus, not both");
      if (kap_order < 0) throw ValidationError("--order must be >= 0");
      if (kap_genus >= 0) {
        bool ok = functional_equation_check(kap_genus, kap_order);
        std::vector<EPoly> num = genus_numerator(kap_genus, kap_order);
        std::string text = std::string("functional_equation: ") + (ok ? "true" : "false") +
                           "\nnumerator: " + tseries_str(num, false);
        std::string latex = std::string("functional_equation: ") + (ok ? "true" : "false") +
                            " \\\\\nnumerator: " + tseries_str(num, true);
        Result r{"functional_equation", text, latex};
        std::cout << render_result(r, format) << "\n";
        return 0;
      }
      if (kap_epoly.empty())
        throw ValidationError("give --epoly EXPR or --genus G");
      EPoly e = gpoly_to_epoly(parse_poly_expr(kap_epoly), "class");
      std::vector<EPoly> series = sym_powers(e, kap_order);
      if (!kap_factors.empty()) {
        auto fs = parse_curve_factors(kap_factors);
        bool ok = verify_rational(series, fs);
        std::string text = std::string("rational: ") + (ok ? "true" : "false");
        std::string latex = text;
        if (ok) {
          std::vector<EPoly> num = clear_factors(series, fs);
          text += "\nnumerator: " + tseries_str(num, false);
          latex += " \\\\\nnumerator: " + tseries_str(num, true);
        }
        Result r{"verify_rational", text, latex};
        std::cout << render_result(r, format) << "\n";
        return 0;
      }
      Result r{"sym_powers", epoly_table(series, false), epoly_table(series, true)};
      std::cout << render_result(r, format) << "\n";
      return 0;
    }
    if (cmd_validate->parsed()) {
      return run_resolution_command(validate_src, format, [&](const Resolution& res) {
        ValidationReport rep = validate_resolution(res);
        for (const auto& w : rep.warnings) std::cerr << "warning: " << w << "\n";
        if (!rep.ok()) {
          std::string all;
          for (const auto& e : rep.errors) {
            if (!all.empty()) all += "; ";
            all += e;
          }
          throw ValidationError(all);
        }
        return Result{"validation", "ok", "ok"};
      });
    }
    if (cmd_fixtures->parsed()) {
      std::string text = "fixtures:";
      for (const auto& n : builtin_fixture_names()) text += " " + n;
      text += "\ngroups:";
      for (const auto& n : builtin_group_names()) text += " " + n;
      Result r{"fixtures", text, text};
      std::cout << render_result(r, format) << "\n";
      return 0;
    }
    throw ValidationError("no command given");
  } catch (const Error& e) {
    std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: Internal: " << e.what() << "\n";
    return 2;
  }
}
