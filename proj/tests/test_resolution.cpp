#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>

#include "motivica/errors.hpp"
#include "motivica/resolution.hpp"
#include "test_util.hpp"

using namespace motivica;

namespace {
Json load_json(const std::string& relpath) {
  std::ifstream in(testutil::fixtures_dir() + "/" + relpath);
  REQUIRE(in.good());
  return Json::parse(in);
}

Resolution base() { return builtin_fixture("cuspA"); }
}  // namespace

TEST_CASE("built-in inventories") {
  auto names = builtin_fixture_names();
  REQUIRE(names.size() == 34);
  CHECK(names.front() == "x1");
  CHECK(names[23] == "x24");
  CHECK(names[24] == "node");
  CHECK(names[25] == "cuspA");
  CHECK(names[26] == "cuspB");
  CHECK(names.back() == "axes");
  for (const auto& n : names) CHECK_NOTHROW(builtin_fixture(n));
  CHECK_THROWS_AS(builtin_fixture("nope"), UnknownFixture);

  auto groups = builtin_group_names();
  REQUIRE(groups.size() == 6);
  CHECK(groups == std::vector<std::string>{"a1", "a2", "a3", "a4", "a5", "third"});
  CHECK_THROWS_AS(builtin_group("nope"), UnknownFixture);
}

TEST_CASE("every built-in fixture validates cleanly") {
  for (const auto& n : builtin_fixture_names()) {
    Resolution res = builtin_fixture(n);
    ValidationReport rep = validate_resolution(res);
    CHECK(rep.ok());
    CHECK_NOTHROW(require_valid(res));
    if (n == "cuspA" || n == "cuspB" || n == "axes") {
      CHECK(rep.warnings.size() == 1);
    } else {
      CHECK(rep.warnings.empty());
    }
  }
  // The two cusp models disagree with the naive cover Euler bound by design;
  // the axes fixture carries an uncovered over-locus stratum.
  auto repA = validate_resolution(builtin_fixture("cuspA"));
  REQUIRE(repA.warnings.size() == 1);
  CHECK(repA.warnings[0].find("cover of {E3}") != std::string::npos);
  auto repX = validate_resolution(builtin_fixture("axes"));
  REQUIRE(repX.warnings.size() == 1);
  CHECK(repX.warnings[0].find("has no cover") != std::string::npos);
}

TEST_CASE("shipped fixture files match the built-ins") {
  const char* shipped[] = {"x1",  "x2",    "x3",   "x6",       "node",
                           "cuspA", "cuspB", "an1",  "an2",      "an3",
                           "third_11", "axes"};
  for (const char* name : shipped) {
    CAPTURE(name);
    Json j = load_json(std::string(name) + ".json");
    Resolution loaded = resolution_from_json(j);
    CHECK(resolution_to_json(loaded).dump() ==
          resolution_to_json(builtin_fixture(name)).dump());
    // Serialization is deterministic.
    CHECK(resolution_to_json(loaded).dump() == resolution_to_json(loaded).dump());
  }
}

TEST_CASE("serialization round-trips every built-in") {
  for (const auto& n : builtin_fixture_names()) {
    Resolution res = builtin_fixture(n);
    Json j = resolution_to_json(res);
    Resolution again = resolution_from_json(j);
    CHECK(resolution_to_json(again).dump() == j.dump());
  }
}

TEST_CASE("component lookup and cover degree targets") {
  Resolution res = base();
  CHECK(res.has_component("E3"));
  CHECK_FALSE(res.has_component("E9"));
  CHECK(res.component("E3").exceptional);
  CHECK(res.component("E3").N == std::vector<long>{6});
  CHECK_THROWS_AS(res.component("E9"), ValidationError);
  for (const auto& st : res.strata) {
    if (st.comps == std::vector<std::string>{"E3"})
      CHECK(res.cover_degree_target(st) == 6);
  }
  CHECK(res.cover_degree_target(Stratum{}) == 0);
}

TEST_CASE("validator rejects malformed resolutions") {
  auto first_error = [](const Resolution& r) {
    ValidationReport rep = validate_resolution(r);
    REQUIRE_FALSE(rep.ok());
    return rep.errors.front();
  };

  Resolution r1 = base();
  r1.components[0].id = r1.components[1].id;
  CHECK(first_error(r1).find("duplicate") != std::string::npos);

  Resolution r2 = base();
  r2.components[0].N = {1, 2};
  CHECK(first_error(r2).find("multiplicities") != std::string::npos);

  Resolution r3 = base();
  r3.components[0].N = {-1};
  CHECK_FALSE(validate_resolution(r3).ok());

  Resolution r4 = base();
  r4.components[0].nu = Rat(0);
  CHECK_FALSE(validate_resolution(r4).ok());

  Resolution r5 = base();
  r5.strata[0].comps = {"E9"};
  CHECK(first_error(r5).find("unknown component") != std::string::npos);

  Resolution r6 = base();
  r6.strata.push_back(r6.strata[0]);
  CHECK(first_error(r6).find("duplicate") != std::string::npos);

  Resolution r7 = base();
  r7.strata[0].comps = {"E1", "E1"};
  CHECK_FALSE(validate_resolution(r7).ok());

  Resolution r8 = base();
  for (auto& st : r8.strata)
    if (st.comps.empty()) st.over_locus = true;
  CHECK_FALSE(validate_resolution(r8).ok());

  Resolution r9 = base();
  r9.r = -1;
  CHECK_FALSE(validate_resolution(r9).ok());

  Resolution r10 = base();
  r10.dim = 0;
  CHECK_FALSE(validate_resolution(r10).ok());

  // Cover degree must match the gcd of multiplicities over the stratum.
  Resolution r11 = base();
  for (auto& st : r11.strata)
    if (st.cover) st.cover->degree = st.cover->degree + 1;
  CHECK_FALSE(validate_resolution(r11).ok());

  // The character-zero part of the cover must reproduce the stratum class.
  Resolution r12 = base();
  for (auto& st : r12.strata)
    if (st.cover) st.cover->chars.add(Rat(0), EPoly(1));
  CHECK_FALSE(validate_resolution(r12).ok());

  CHECK_THROWS_AS(require_valid(r5), ValidationError);
}

TEST_CASE("resolution JSON schema errors") {
  Json good = resolution_to_json(base());

  Json missing = good;
  missing.erase("strata");
  CHECK_THROWS_AS(resolution_from_json(missing), SchemaError);

  Json extra = good;
  extra["surprise"] = 1;
  CHECK_THROWS_AS(resolution_from_json(extra), SchemaError);

  Json badtype = good;
  badtype["r"] = "one";
  CHECK_THROWS_AS(resolution_from_json(badtype), SchemaError);

  Json badcomp = good;
  badcomp["components"] = 7;
  CHECK_THROWS_AS(resolution_from_json(badcomp), SchemaError);

  Json badN = good;
  badN["components"][0]["N"] = {Json::parse("1.5")};
  CHECK_THROWS_AS(resolution_from_json(badN), SchemaError);

  Json badnu = good;
  badnu["components"][0]["nu"] = "zero over zero";
  CHECK_THROWS_AS(resolution_from_json(badnu), ParseError);

  Json badstrata = good;
  badstrata["strata"] = "none";
  CHECK_THROWS_AS(resolution_from_json(badstrata), SchemaError);

  CHECK_THROWS_AS(resolution_from_json(Json::parse("[]")), SchemaError);

  // Duplicate cover characters are a parse-level complaint.
  Json dupchar = good;
  bool found = false;
  for (auto& st : dupchar["strata"]) {
    if (st.contains("cover")) {
      found = true;
      // keys are parsed in order; injecting an equivalent spelling of an
      // existing character collides after normalization
      Json chars = st["cover"]["chars"];
      std::string existing = chars.begin().key();
      st["cover"]["chars"][" " + existing] = chars.begin().value();
      break;
    }
  }
  if (found) CHECK_THROWS_AS(resolution_from_json(dupchar), ParseError);
}

TEST_CASE("group data loads from JSON and matches the built-ins") {
  const char* names[] = {"a1", "a2", "a3", "a4", "a5", "third"};
  for (const char* n : names) {
    CAPTURE(n);
    AbelianGroup file = group_from_json(load_json(std::string("groups/") + n + ".json"));
    AbelianGroup ref = builtin_group(n);
    CHECK(file.m == ref.m);
    CHECK(file.dim == ref.dim);
    CHECK(file.generators == ref.generators);
  }
  // a_k groups: order k+1 acting diagonally on the plane by (1, k).
  AbelianGroup a3 = builtin_group("a3");
  CHECK(a3.m == 4);
  CHECK(a3.dim == 2);
  CHECK(a3.generators == std::vector<std::vector<long>>{{1, 3}});

  // Generator entries reduce modulo m.
  Json j;
  j["m"] = 3;
  j["dim"] = 2;
  j["generators"] = {{4, -2}};
  AbelianGroup g = group_from_json(j);
  CHECK(g.generators == std::vector<std::vector<long>>{{1, 1}});

  Json bad1;
  bad1["m"] = 0;
  bad1["dim"] = 2;
  bad1["generators"] = Json::array();
  CHECK_THROWS_AS(group_from_json(bad1), ValidationError);

  Json bad2;
  bad2["m"] = 3;
  bad2["dim"] = 2;
  bad2["generators"] = {{1}};
  CHECK_THROWS_AS(group_from_json(bad2), ValidationError);

  Json bad3;
  bad3["m"] = 3;
  bad3["dim"] = 2;
  bad3["generators"] = "none";
  CHECK_THROWS_AS(group_from_json(bad3), SchemaError);
}
