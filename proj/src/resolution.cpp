#include "motivica/resolution.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "motivica/errors.hpp"
#include "motivica/textio.hpp"

namespace motivica {

std::string Stratum::label() const {
  if (comps.empty()) return "{}";
  std::string out = "{";
  for (size_t i = 0; i < comps.size(); ++i) {
    if (i) out += ",";
    out += comps[i];
  }
  return out + "}";
}

const Component& Resolution::component(const std::string& id) const {
  for (const auto& c : components)
    if (c.id == id) return c;
  throw ValidationError("unknown component '" + id + "'");
}

bool Resolution::has_component(const std::string& id) const {
  for (const auto& c : components)
    if (c.id == id) return true;
  return false;
}

long Resolution::cover_degree_target(const Stratum& st) const {
  if (r != 1) return 0;
  Int g = 0;
  for (const auto& id : st.comps) g = int_gcd(g, Int(component(id).N.at(0)));
  return to_long(g, "cover degree");
}

namespace {

void require_keys(const Json& j, const std::vector<std::string>& required,
                  const std::vector<std::string>& optional, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + " must be an object");
  for (const auto& k : required)
    if (!j.contains(k)) throw SchemaError(where + " is missing key '" + k + "'");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    if (std::find(required.begin(), required.end(), k) == required.end() &&
        std::find(optional.begin(), optional.end(), k) == optional.end())
      throw SchemaError(where + " has unexpected key '" + k + "'");
  }
}

long get_int(const Json& j, const std::string& key, const std::string& where) {
  if (!j.at(key).is_number_integer())
    throw SchemaError(where + " key '" + key + "' must be an integer");
  return j.at(key).get<long>();
}

std::string get_str(const Json& j, const std::string& key, const std::string& where) {
  if (!j.at(key).is_string())
    throw SchemaError(where + " key '" + key + "' must be a string");
  return j.at(key).get<std::string>();
}

bool get_bool(const Json& j, const std::string& key, const std::string& where) {
  if (!j.at(key).is_boolean())
    throw SchemaError(where + " key '" + key + "' must be a boolean");
  return j.at(key).get<bool>();
}

EPoly parse_class(const std::string& text, const std::string& what) {
  return gpoly_to_epoly(parse_poly_expr(text), what);
}

ZPoly parse_count(const std::string& text, const std::string& what) {
  auto m = gpoly_to_uni(parse_poly_expr(text), "q", false, what);
  ZPoly p;
  for (const auto& [e, c] : m) p[e] = c;
  return p;
}

}  // namespace

Resolution resolution_from_json(const Json& j) {
  require_keys(j, {"r", "dim", "components", "strata"}, {}, "fixture");
  Resolution res;
  res.r = get_int(j, "r", "fixture");
  res.dim = get_int(j, "dim", "fixture");
  if (!j.at("components").is_array())
    throw SchemaError("fixture key 'components' must be an array");
  for (const auto& cj : j.at("components")) {
    require_keys(cj, {"id", "N", "nu", "exceptional"}, {}, "component");
    Component c;
    c.id = get_str(cj, "id", "component");
    if (!cj.at("N").is_array()) throw SchemaError("component 'N' must be an array");
    for (const auto& nj : cj.at("N")) {
      if (!nj.is_number_integer())
        throw SchemaError("component 'N' entries must be integers");
      c.N.push_back(nj.get<long>());
    }
    c.nu = parse_rational(get_str(cj, "nu", "component"));
    c.exceptional = get_bool(cj, "exceptional", "component");
    res.components.push_back(std::move(c));
  }
  if (!j.at("strata").is_array())
    throw SchemaError("fixture key 'strata' must be an array");
  for (const auto& sj : j.at("strata")) {
    require_keys(sj, {"components", "epoly", "over_locus"}, {"count", "cover"}, "stratum");
    Stratum st;
    if (!sj.at("components").is_array())
      throw SchemaError("stratum 'components' must be an array");
    for (const auto& idj : sj.at("components")) {
      if (!idj.is_string()) throw SchemaError("stratum component ids must be strings");
      st.comps.push_back(idj.get<std::string>());
    }
    std::sort(st.comps.begin(), st.comps.end());
    st.epoly = parse_class(get_str(sj, "epoly", "stratum"), "stratum class");
    st.over_locus = get_bool(sj, "over_locus", "stratum");
    if (sj.contains("count"))
      st.count = parse_count(get_str(sj, "count", "stratum"), "stratum count");
    if (sj.contains("cover")) {
      const Json& cj = sj.at("cover");
      require_keys(cj, {"degree", "chars"}, {}, "cover");
      Cover cov;
      cov.degree = get_int(cj, "degree", "cover");
      if (!cj.at("chars").is_object())
        throw SchemaError("cover 'chars' must be an object");
      for (auto it = cj.at("chars").begin(); it != cj.at("chars").end(); ++it) {
        Rat chr = parse_character(it.key());
        if (!it.value().is_string())
          throw SchemaError("cover character values must be strings");
        EPoly part = parse_class(it.value().get<std::string>(), "cover character class");
        if (cov.chars.parts().count(chr))
          throw ParseError("duplicate character '" + it.key() + "' in cover");
        cov.chars.add(chr, part);
      }
      st.cover = std::move(cov);
    }
    res.strata.push_back(std::move(st));
  }
  return res;
}

Json resolution_to_json(const Resolution& res) {
  Json j;
  j["r"] = res.r;
  j["dim"] = res.dim;
  j["components"] = Json::array();
  for (const auto& c : res.components) {
    Json cj;
    cj["id"] = c.id;
    cj["N"] = c.N;
    cj["nu"] = rat_str(c.nu);
    cj["exceptional"] = c.exceptional;
    j["components"].push_back(cj);
  }
  j["strata"] = Json::array();
  for (const auto& st : res.strata) {
    Json sj;
    sj["components"] = st.comps;
    sj["epoly"] = st.epoly.str();
    sj["over_locus"] = st.over_locus;
    if (st.count) sj["count"] = zp_str(*st.count, "q");
    if (st.cover) {
      Json cj;
      cj["degree"] = st.cover->degree;
      Json chars = Json::object();
      for (const auto& [a, e] : st.cover->chars.parts()) chars[rat_str(a)] = e.str();
      cj["chars"] = chars;
      sj["cover"] = cj;
    }
    j["strata"].push_back(sj);
  }
  return j;
}

ValidationReport validate_resolution(const Resolution& res) {
  ValidationReport rep;
  auto err = [&](const std::string& m) { rep.errors.push_back(m); };
  auto warn = [&](const std::string& m) { rep.warnings.push_back(m); };

  if (res.r < 0) err("r must be nonnegative");
  if (res.dim < 1) err("dim must be positive");

  std::set<std::string> ids;
  for (const auto& c : res.components) {
    if (c.id.empty()) err("component with empty id");
    if (!ids.insert(c.id).second) err("duplicate component id '" + c.id + "'");
    if (static_cast<long>(c.N.size()) != res.r)
      err("component '" + c.id + "' has " + std::to_string(c.N.size()) +
          " multiplicities, expected " + std::to_string(res.r));
    for (long n : c.N)
      if (n < 0) err("component '" + c.id + "' has a negative multiplicity");
    if (c.nu <= 0) err("component '" + c.id + "' must have nu > 0");
  }

  std::set<std::vector<std::string>> seen;
  for (const auto& st : res.strata) {
    for (const auto& id : st.comps)
      if (!ids.count(id)) err("stratum " + st.label() + " references unknown component '" + id + "'");
    std::set<std::string> dedup(st.comps.begin(), st.comps.end());
    if (dedup.size() != st.comps.size())
      err("stratum " + st.label() + " repeats a component");
    if (!seen.insert(st.comps).second)
      err("duplicate stratum " + st.label());
    if (st.over_locus && res.r >= 1 && st.comps.empty())
      err("over-locus stratum must lie on at least one component");
    if (st.cover) {
      if (st.cover->degree < 1) err("cover of " + st.label() + " must have degree >= 1");
      bool comps_known = true;
      for (const auto& id : st.comps)
        if (!ids.count(id)) comps_known = false;
      if (res.r == 1 && comps_known && !st.comps.empty()) {
        long target = res.cover_degree_target(st);
        if (target >= 1 && st.cover->degree != target)
          err("cover degree of " + st.label() + " is " + std::to_string(st.cover->degree) +
              ", expected gcd of multiplicities " + std::to_string(target));
      }
      if (st.cover->chars.aug() != st.epoly)
        err("cover of " + st.label() +
            " has character-zero part different from the stratum class");
      Int chi_total = 0;
      for (const auto& [a, e] : st.cover->chars.parts()) {
        (void)a;
        chi_total += e.euler();
      }
      if (chi_total != Int(st.cover->degree) * st.epoly.euler())
        warn("cover of " + st.label() + " has Euler characteristic " + chi_total.get_str() +
             ", a degree-" + std::to_string(st.cover->degree) +
             " cover of a class with Euler characteristic " + st.epoly.euler().get_str() +
             " would have " + Int(Int(st.cover->degree) * st.epoly.euler()).get_str());
    } else if (st.over_locus) {
      warn("over-locus stratum " + st.label() + " has no cover");
    }
  }
  return rep;
}

void require_valid(const Resolution& res) {
  auto rep = validate_resolution(res);
  if (!rep.ok()) throw ValidationError(rep.errors.front());
}

namespace {

Json xn_fixture(long n) {
  Json j;
  j["r"] = 1;
  j["dim"] = 1;
  j["components"] = Json::array(
      {Json{{"id", "E"}, {"N", Json::array({n})}, {"nu", "1"}, {"exceptional", false}}});
  Json chars = Json::object();
  for (long k = 0; k < n; ++k) {
    Rat c(k, n);
    c.canonicalize();
    chars[rat_str(c)] = "1";
  }
  j["strata"] = Json::array();
  j["strata"].push_back(Json{{"components", Json::array()},
                             {"epoly", "L-1"},
                             {"over_locus", false},
                             {"count", "q-1"}});
  j["strata"].push_back(Json{{"components", Json::array({"E"})},
                             {"epoly", "1"},
                             {"over_locus", true},
                             {"count", "1"},
                             {"cover", Json{{"degree", n}, {"chars", chars}}}});
  return j;
}

Json cusp_a_fixture() {
  Json j;
  j["r"] = 1;
  j["dim"] = 2;
  j["components"] = Json::array();
  auto comp = [&](const std::string& id, long N, const std::string& nu, bool exc) {
    j["components"].push_back(
        Json{{"id", id}, {"N", Json::array({N})}, {"nu", nu}, {"exceptional", exc}});
  };
  comp("E0", 1, "1", false);
  comp("E1", 2, "2", true);
  comp("E2", 3, "3", true);
  comp("E3", 6, "5", true);
  j["strata"] = Json::array();
  auto stratum = [&](std::vector<std::string> cs, const std::string& ep, bool over,
                     const std::string& count, Json cover = Json()) {
    Json sj{{"components", cs}, {"epoly", ep}, {"over_locus", over}, {"count", count}};
    if (!cover.is_null()) sj["cover"] = cover;
    j["strata"].push_back(sj);
  };
  stratum({}, "L^2-L", false, "q^2-q");
  stratum({"E0"}, "L-1", false, "q-1");
  stratum({"E1"}, "L", false, "q");
  stratum({"E2"}, "L", false, "q");
  stratum({"E3"}, "L-2", true, "q-2",
          Json{{"degree", 6},
               {"chars", Json{{"0", "L-2"},
                              {"1/6", "u"},
                              {"1/3", "L-1"},
                              {"1/2", "L-1"},
                              {"2/3", "L-1"},
                              {"5/6", "v"}}}});
  stratum({"E0", "E3"}, "1", true, "1",
          Json{{"degree", 1}, {"chars", Json{{"0", "1"}}}});
  stratum({"E1", "E3"}, "1", true, "1",
          Json{{"degree", 2}, {"chars", Json{{"0", "1"}, {"1/2", "1"}}}});
  stratum({"E2", "E3"}, "1", true, "1",
          Json{{"degree", 3}, {"chars", Json{{"0", "1"}, {"1/3", "1"}, {"2/3", "1"}}}});
  return j;
}

Json cusp_b_fixture() {
  Json j;
  j["r"] = 1;
  j["dim"] = 2;
  j["components"] = Json::array();
  auto comp = [&](const std::string& id, long N, const std::string& nu, bool exc) {
    j["components"].push_back(
        Json{{"id", id}, {"N", Json::array({N})}, {"nu", nu}, {"exceptional", exc}});
  };
  comp("E0", 1, "1", false);
  comp("E1", 2, "2", true);
  comp("E2", 3, "3", true);
  comp("E3", 6, "5", true);
  comp("E4", 6, "6", true);
  j["strata"] = Json::array();
  auto stratum = [&](std::vector<std::string> cs, const std::string& ep, bool over,
                     const std::string& count, Json cover = Json()) {
    Json sj{{"components", cs}, {"epoly", ep}, {"over_locus", over}, {"count", count}};
    if (!cover.is_null()) sj["cover"] = cover;
    j["strata"].push_back(sj);
  };
  stratum({}, "L^2-L", false, "q^2-q");
  stratum({"E0"}, "L-1", false, "q-1");
  stratum({"E1"}, "L", false, "q");
  stratum({"E2"}, "L", false, "q");
  stratum({"E3"}, "L-3", true, "q-3",
          Json{{"degree", 6},
               {"chars", Json{{"0", "L-3"},
                              {"1/6", "u-1"},
                              {"1/3", "L-2"},
                              {"1/2", "L-2"},
                              {"2/3", "L-2"},
                              {"5/6", "v-1"}}}});
  stratum({"E4"}, "L", true, "q",
          Json{{"degree", 6},
               {"chars", Json{{"0", "L"},
                              {"1/6", "L"},
                              {"1/3", "L"},
                              {"1/2", "L"},
                              {"2/3", "L"},
                              {"5/6", "L"}}}});
  stratum({"E0", "E3"}, "1", true, "1",
          Json{{"degree", 1}, {"chars", Json{{"0", "1"}}}});
  stratum({"E1", "E3"}, "1", true, "1",
          Json{{"degree", 2}, {"chars", Json{{"0", "1"}, {"1/2", "1"}}}});
  stratum({"E2", "E3"}, "1", true, "1",
          Json{{"degree", 3}, {"chars", Json{{"0", "1"}, {"1/3", "1"}, {"2/3", "1"}}}});
  stratum({"E3", "E4"}, "1", true, "1",
          Json{{"degree", 6},
               {"chars", Json{{"0", "1"},
                              {"1/6", "1"},
                              {"1/3", "1"},
                              {"1/2", "1"},
                              {"2/3", "1"},
                              {"5/6", "1"}}}});
  return j;
}

Json node_fixture() {
  Json j;
  j["r"] = 1;
  j["dim"] = 2;
  j["components"] = Json::array();
  auto comp = [&](const std::string& id, long N, const std::string& nu, bool exc) {
    j["components"].push_back(
        Json{{"id", id}, {"N", Json::array({N})}, {"nu", nu}, {"exceptional", exc}});
  };
  comp("Lp", 1, "1", false);
  comp("Lm", 1, "1", false);
  comp("E1", 2, "2", true);
  j["strata"] = Json::array();
  auto stratum = [&](std::vector<std::string> cs, const std::string& ep, bool over,
                     const std::string& count, Json cover = Json()) {
    Json sj{{"components", cs}, {"epoly", ep}, {"over_locus", over}, {"count", count}};
    if (!cover.is_null()) sj["cover"] = cover;
    j["strata"].push_back(sj);
  };
  stratum({}, "L^2-2*L+1", false, "q^2-2*q+1");
  stratum({"Lp"}, "L-1", false, "q-1");
  stratum({"Lm"}, "L-1", false, "q-1");
  stratum({"E1"}, "L-1", true, "q-1",
          Json{{"degree", 2}, {"chars", Json{{"0", "L-1"}}}});
  stratum({"E1", "Lp"}, "1", true, "1",
          Json{{"degree", 1}, {"chars", Json{{"0", "1"}}}});
  stratum({"E1", "Lm"}, "1", true, "1",
          Json{{"degree", 1}, {"chars", Json{{"0", "1"}}}});
  return j;
}

Json an_fixture(long k) {
  Json j;
  j["r"] = 0;
  j["dim"] = 2;
  j["components"] = Json::array();
  for (long i = 1; i <= k; ++i)
    j["components"].push_back(Json{{"id", "E" + std::to_string(i)},
                                   {"N", Json::array()},
                                   {"nu", "1"},
                                   {"exceptional", true}});
  j["strata"] = Json::array();
  j["strata"].push_back(Json{{"components", Json::array()},
                             {"epoly", "L^2-1"},
                             {"over_locus", false}});
  for (long i = 1; i <= k; ++i) {
    std::string ep = (k == 1) ? "L+1" : ((i == 1 || i == k) ? "L" : "L-1");
    j["strata"].push_back(Json{{"components", Json::array({"E" + std::to_string(i)})},
                               {"epoly", ep},
                               {"over_locus", false}});
  }
  for (long i = 1; i < k; ++i)
    j["strata"].push_back(
        Json{{"components", Json::array({"E" + std::to_string(i), "E" + std::to_string(i + 1)})},
             {"epoly", "1"},
             {"over_locus", false}});
  return j;
}

Json third_fixture() {
  Json j;
  j["r"] = 0;
  j["dim"] = 2;
  j["components"] = Json::array(
      {Json{{"id", "E"}, {"N", Json::array()}, {"nu", "2/3"}, {"exceptional", true}}});
  j["strata"] = Json::array();
  j["strata"].push_back(Json{{"components", Json::array()},
                             {"epoly", "L^2-1"},
                             {"over_locus", false}});
  j["strata"].push_back(Json{{"components", Json::array({"E"})},
                             {"epoly", "L+1"},
                             {"over_locus", false}});
  return j;
}

Json axes_fixture() {
  Json j;
  j["r"] = 2;
  j["dim"] = 2;
  j["components"] = Json::array();
  j["components"].push_back(Json{
      {"id", "X"}, {"N", Json::array({1, 0})}, {"nu", "1"}, {"exceptional", false}});
  j["components"].push_back(Json{
      {"id", "Y"}, {"N", Json::array({0, 1})}, {"nu", "1"}, {"exceptional", false}});
  j["strata"] = Json::array();
  j["strata"].push_back(Json{{"components", Json::array()},
                             {"epoly", "L^2-2*L+1"},
                             {"over_locus", false},
                             {"count", "q^2-2*q+1"}});
  j["strata"].push_back(Json{{"components", Json::array({"X"})},
                             {"epoly", "L-1"},
                             {"over_locus", false},
                             {"count", "q-1"}});
  j["strata"].push_back(Json{{"components", Json::array({"Y"})},
                             {"epoly", "L-1"},
                             {"over_locus", false},
                             {"count", "q-1"}});
  j["strata"].push_back(Json{{"components", Json::array({"X", "Y"})},
                             {"epoly", "1"},
                             {"over_locus", true},
                             {"count", "1"}});
  return j;
}

}  // namespace

Resolution builtin_fixture(const std::string& name) {
  Json j;
  if (name.size() >= 2 && name[0] == 'x') {
    bool digits = true;
    for (size_t i = 1; i < name.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(name[i]))) digits = false;
    if (digits) {
      long n = std::stol(name.substr(1));
      if (n >= 1 && n <= 24) j = xn_fixture(n);
    }
  }
  if (j.is_null()) {
    if (name == "node") j = node_fixture();
    else if (name == "cuspA") j = cusp_a_fixture();
    else if (name == "cuspB") j = cusp_b_fixture();
    else if (name == "third_11") j = third_fixture();
    else if (name == "axes") j = axes_fixture();
    else if (name.size() == 3 && name.substr(0, 2) == "an" && name[2] >= '1' && name[2] <= '5')
      j = an_fixture(name[2] - '0');
  }
  if (j.is_null()) throw UnknownFixture("no built-in fixture named '" + name + "'");
  return resolution_from_json(j);
}

std::vector<std::string> builtin_fixture_names() {
  std::vector<std::string> names;
  for (long n = 1; n <= 24; ++n) names.push_back("x" + std::to_string(n));
  names.push_back("node");
  names.push_back("cuspA");
  names.push_back("cuspB");
  for (long k = 1; k <= 5; ++k) names.push_back("an" + std::to_string(k));
  names.push_back("third_11");
  names.push_back("axes");
  return names;
}

AbelianGroup group_from_json(const Json& j) {
  require_keys(j, {"m", "dim", "generators"}, {}, "group");
  AbelianGroup g;
  g.m = get_int(j, "m", "group");
  g.dim = get_int(j, "dim", "group");
  if (g.m < 1) throw ValidationError("group order parameter m must be >= 1");
  if (g.dim < 1) throw ValidationError("group dim must be >= 1");
  if (!j.at("generators").is_array())
    throw SchemaError("group 'generators' must be an array");
  for (const auto& gj : j.at("generators")) {
    if (!gj.is_array()) throw SchemaError("group generators must be arrays");
    std::vector<long> gen;
    for (const auto& aj : gj) {
      if (!aj.is_number_integer())
        throw SchemaError("generator entries must be integers");
      long a = aj.get<long>();
      a %= g.m;
      if (a < 0) a += g.m;
      gen.push_back(a);
    }
    if (static_cast<long>(gen.size()) != g.dim)
      throw ValidationError("generator length must equal dim");
    g.generators.push_back(std::move(gen));
  }
  return g;
}

AbelianGroup builtin_group(const std::string& name) {
  Json j;
  if (name.size() == 2 && name[0] == 'a' && name[1] >= '1' && name[1] <= '5') {
    long k = name[1] - '0';
    j = Json{{"m", k + 1}, {"dim", 2}, {"generators", Json::array({Json::array({1, k})})}};
  } else if (name == "third") {
    j = Json{{"m", 3}, {"dim", 2}, {"generators", Json::array({Json::array({1, 1})})}};
  } else {
    throw UnknownFixture("no built-in group named '" + name + "'");
  }
  return group_from_json(j);
}

std::vector<std::string> builtin_group_names() {
  return {"a1", "a2", "a3", "a4", "a5", "third"};
}

}  // namespace motivica
