#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "motivica/eqclass.hpp"
#include "motivica/epoly.hpp"
#include "motivica/unirings.hpp"

namespace motivica {

using Json = nlohmann::ordered_json;

// One divisor component on the resolved space: multiplicities N_1..N_r along
// the r input functions, the twist/discrepancy weight nu, and whether the
// component is exceptional for the resolution.
struct Component {
  std::string id;
  std::vector<long> N;
  Rat nu;
  bool exceptional = false;
};

// Equivariant class of the degree-`degree` cyclic cover of a stratum,
// decomposed by character.
struct Cover {
  long degree = 1;
  EqClass chars;
};

// Locally closed stratum E_I^o indexed by the set of components containing
// it, with its class, an optional point count over finite fields, and an
// optional cover.  over_locus marks strata lying over the singular value.
struct Stratum {
  std::vector<std::string> comps;  // sorted ids
  EPoly epoly;
  bool over_locus = false;
  std::optional<ZPoly> count;
  std::optional<Cover> cover;

  std::string label() const;
};

struct Resolution {
  long r = 1;
  long dim = 1;
  std::vector<Component> components;
  std::vector<Stratum> strata;

  const Component& component(const std::string& id) const;
  bool has_component(const std::string& id) const;
  // gcd of first multiplicities over the stratum (r = 1); 0 for the empty set.
  long cover_degree_target(const Stratum& st) const;
};

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  bool ok() const { return errors.empty(); }
};

Resolution resolution_from_json(const Json& j);
Json resolution_to_json(const Resolution& res);
ValidationReport validate_resolution(const Resolution& res);
// Throws ValidationError on the first validation error.
void require_valid(const Resolution& res);

// Built-in fixtures: x1..x24 (one variable, f = x^N), node, cuspA, cuspB
// (two resolutions of the cusp), an1..an5 (A_k surface germs), third_11
// (cyclic third-point quotient), axes (r = 2 coordinate axes).
Resolution builtin_fixture(const std::string& name);
std::vector<std::string> builtin_fixture_names();

// Finite diagonal abelian group data for orbifold sums.
struct AbelianGroup {
  long m = 1;
  long dim = 1;
  std::vector<std::vector<long>> generators;
};

AbelianGroup group_from_json(const Json& j);
AbelianGroup builtin_group(const std::string& name);  // a1..a5, third
std::vector<std::string> builtin_group_names();

}  // namespace motivica
