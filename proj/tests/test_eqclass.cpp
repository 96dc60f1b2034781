#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "motivica/eqclass.hpp"
#include "motivica/errors.hpp"
#include "motivica/unirings.hpp"
#include "test_util.hpp"

using namespace motivica;
using testutil::Rng;
using testutil::random_epoly;
using testutil::random_eqclass;

namespace {
const EPoly Lm1 = EPoly::L() - EPoly(1);

EqClass unit_class() { return EqClass(EPoly(1)); }

// Sum over nonzero characters of a_alpha * b_{-alpha}.
EPoly opposite_pairing(const EqClass& a, const EqClass& b) {
  EPoly acc;
  for (const auto& [chr, part] : a.parts()) {
    if (chr == 0) continue;
    Rat opp = Rat(1) - chr;
    auto it = b.parts().find(opp);
    if (it != b.parts().end()) acc += part * it->second;
  }
  return acc;
}

// The associator-corrected triple expression; exactly symmetric in a, b, c.
EqClass triple_form(const EqClass& a, const EqClass& b, const EqClass& c) {
  EqClass bc = quasi_conv(b, c);
  EqClass out = quasi_conv(a, bc);
  out -= EqClass(Lm1 * (a * bc).aug());
  out += EqClass(Lm1 * Lm1 * a.aug() * (b * c).aug());
  return out;
}
}  // namespace

TEST_CASE("construction, parts, printing, parsing") {
  EqClass z;
  CHECK(z.is_zero());
  CHECK(z.str() == "0");
  CHECK(parse_eqclass("0") == z);

  EqClass c = EqClass::part(Rat(1, 2), EPoly::u_var());
  c.add(Rat(0), EPoly(1));
  CHECK(c.str() == "{0:1, 1/2:u}");
  CHECK(parse_eqclass(c.str()) == c);
  CHECK(parse_eqclass("{ 1/2 : u , 0 : 1 }") == c);

  // set replaces, add accumulates, zero parts are dropped.
  EqClass d;
  d.set(Rat(1, 3), EPoly(2));
  d.set(Rat(1, 3), EPoly(5));
  CHECK(d.parts().at(Rat(1, 3)) == EPoly(5));
  d.add(Rat(1, 3), EPoly(-5));
  CHECK(d.is_zero());

  CHECK_THROWS_AS(parse_eqclass(""), ParseError);
  CHECK_THROWS_AS(parse_eqclass("{0:1"), ParseError);
  CHECK_THROWS_AS(parse_eqclass("{0 1}"), ParseError);
  CHECK_THROWS_AS(parse_eqclass("{0:1, 0:u}"), ParseError);
  CHECK_THROWS_AS(parse_eqclass("{3/6:1}"), ParseError);
  CHECK_THROWS_AS(parse_eqclass("{7/6:1}"), ParseError);

  Rng rng(0xec1a0000u);
  for (int iter = 0; iter < 100; ++iter) {
    EqClass r = random_eqclass(rng);
    CHECK(parse_eqclass(r.str()) == r);
  }
}

TEST_CASE("plain product adds characters modulo 1") {
  EqClass a = EqClass::part(Rat(2, 3), EPoly(1));
  EqClass b = EqClass::part(Rat(1, 2), EPoly::u_var());
  EqClass ab = a * b;
  REQUIRE(ab.parts().size() == 1);
  CHECK(ab.parts().begin()->first == Rat(1, 6));
  CHECK(ab.parts().begin()->second == EPoly::u_var());

  // Opposite characters meet at zero.
  EqClass c = EqClass::part(Rat(1, 3), EPoly(1)) * EqClass::part(Rat(2, 3), EPoly(1));
  CHECK(c == unit_class());

  Rng rng(0xec1a0001u);
  for (int iter = 0; iter < 200; ++iter) {
    EqClass x = random_eqclass(rng), y = random_eqclass(rng),
            w = random_eqclass(rng);
    CHECK(x * y == y * x);
    CHECK((x * y) * w == x * (y * w));
    CHECK(x * (y + w) == x * y + x * w);
    CHECK(x * unit_class() == x);
    CHECK(x.scale(EPoly(3)) == x * EqClass(EPoly(3)));
    CHECK((x - x).is_zero());
  }
}

TEST_CASE("quasi-convolution on named examples") {
  // Regular sixth-root character classes of the two cusp branches.
  EqClass phi2 = EqClass::part(Rat(1, 2), EPoly(1));
  EqClass phi3 = EqClass::part(Rat(1, 3), EPoly(1));
  phi3.add(Rat(2, 3), EPoly(1));

  EqClass expect;
  expect.add(Rat(1, 6), EPoly::u_var());
  expect.add(Rat(5, 6), EPoly::v_var());
  CHECK(quasi_conv(phi2, phi3) == expect);

  // Opposite characters land at zero with a factor uv.
  EqClass half = EqClass::part(Rat(1, 2), EPoly(1));
  CHECK(quasi_conv(half, half) == EqClass(EPoly::L()));

  // Below-1 lift picks up v, above-1 picks up u.
  EqClass sixth = EqClass::part(Rat(1, 6), EPoly(1));
  EqClass third = EqClass::part(Rat(1, 3), EPoly(1));
  CHECK(quasi_conv(sixth, third) == EqClass::part(Rat(1, 2), EPoly::v_var()));
  EqClass fivesixth = EqClass::part(Rat(5, 6), EPoly(1));
  CHECK(quasi_conv(fivesixth, fivesixth) ==
        EqClass::part(Rat(2, 3), EPoly::u_var()));
}

TEST_CASE("quasi-convolution unit and character-zero absorption") {
  Rng rng(0xec1a0002u);
  for (int iter = 0; iter < 200; ++iter) {
    EqClass a = random_eqclass(rng);
    CHECK(quasi_conv(a, unit_class()) == a);
    CHECK(quasi_conv(unit_class(), a) == a);
    // A purely character-zero partner acts by scaling.
    EqClass c = EqClass(random_epoly(rng));
    CHECK(quasi_conv(a, c) == a.scale(c.aug()));
  }
}

TEST_CASE("quasi-convolution is commutative and bilinear") {
  Rng rng(0xec1a0003u);
  for (int iter = 0; iter < 200; ++iter) {
    EqClass a = random_eqclass(rng), b = random_eqclass(rng),
            c = random_eqclass(rng);
    CHECK(quasi_conv(a, b) == quasi_conv(b, a));
    CHECK(quasi_conv(a, b + c) == quasi_conv(a, b) + quasi_conv(a, c));
    CHECK(quasi_conv(a + b, c) == quasi_conv(a, c) + quasi_conv(b, c));
  }
}

TEST_CASE("augmentation of a quasi-convolution (exact correction term)") {
  // aug(a ** b) = aug(a b) + (uv - 1) * sum_{alpha != 0} a_alpha b_{-alpha};
  // reducing modulo L - 1 kills the correction, giving the congruence form.
  Rng rng(0xec1a0004u);
  for (int iter = 0; iter < 250; ++iter) {
    EqClass a = random_eqclass(rng), b = random_eqclass(rng);
    EPoly lhs = quasi_conv(a, b).aug();
    EPoly rhs = (a * b).aug() + Lm1 * opposite_pairing(a, b);
    CHECK(lhs == rhs);
    // and the congruence modulo L - 1 in the reduced variable:
    CHECK((lhs - (a * b).aug()).subs_v_uinv().empty());
  }
}

TEST_CASE("corrected triple product is symmetric in all arguments") {
  Rng rng(0xec1a0005u);
  for (int iter = 0; iter < 200; ++iter) {
    EqClass a = random_eqclass(rng, 2), b = random_eqclass(rng, 2),
            c = random_eqclass(rng, 2);
    EqClass ref = triple_form(a, b, c);
    CHECK(triple_form(a, c, b) == ref);
    CHECK(triple_form(b, a, c) == ref);
    CHECK(triple_form(b, c, a) == ref);
    CHECK(triple_form(c, a, b) == ref);
    CHECK(triple_form(c, b, a) == ref);
  }
}

TEST_CASE("join and mapping torus") {
  Rng rng(0xec1a0006u);
  for (int iter = 0; iter < 200; ++iter) {
    EqClass a = random_eqclass(rng), b = random_eqclass(rng);
    CHECK(join(a, b) == EqClass(Lm1 * (a * b).aug()) - quasi_conv(a, b));
    // Against the unit: J(a, 1) = (L-1) aug(a) - a.
    CHECK(join(a, unit_class()) == EqClass(Lm1 * a.aug()) - a);
    CHECK(mapping_torus(a) == Lm1 * a.aug());
    CHECK(join(a, b) == join(b, a));
  }
}

TEST_CASE("involutions") {
  EqClass c = EqClass::part(Rat(1, 3), EPoly::u_var());
  CHECK(c.involute() == EqClass::part(Rat(2, 3), EPoly::u_var()));
  CHECK(c.involute_hodge() == EqClass::part(Rat(2, 3), EPoly::v_var()));

  Rng rng(0xec1a0007u);
  for (int iter = 0; iter < 200; ++iter) {
    EqClass a = random_eqclass(rng), b = random_eqclass(rng);
    CHECK(a.involute().involute() == a);
    CHECK(a.involute_hodge().involute_hodge() == a);
    // Plain involution respects the ring product.
    CHECK((a * b).involute() == a.involute() * b.involute());
    // The u <-> v variant is a homomorphism for the quasi-convolution.
    CHECK(quasi_conv(a, b).involute_hodge() ==
          quasi_conv(a.involute_hodge(), b.involute_hodge()));
  }
}

TEST_CASE("specialization") {
  // Character zero passes through; alpha in (0,1) shifts u^p v^q to
  // u^{p+alpha} v^{q+1-alpha}.
  EqClass phi2 = EqClass::part(Rat(1, 2), EPoly(1));
  CHECK(phi2.spe() == EPoly::monomial(Rat(1, 2), Rat(1, 2)));

  EqClass mix = EqClass(EPoly::L());
  mix.add(Rat(1, 3), EPoly::u_var());
  CHECK(mix.spe() == EPoly::L() + EPoly::monomial(Rat(4, 3), Rat(2, 3)));

  // Total degree must stay integral.
  EqClass bad = EqClass::part(Rat(1, 2), EPoly::u_var() * EPoly::monomial(Rat(1, 2), Rat(0)));
  CHECK_THROWS_AS(bad.spe(), ValidationError);

  // spe turns quasi-convolution into the plain product.
  Rng rng(0xec1a0008u);
  int done = 0;
  for (int iter = 0; iter < 250; ++iter) {
    EqClass a = random_eqclass(rng), b = random_eqclass(rng);
    CHECK(quasi_conv(a, b).spe() == a.spe() * b.spe());
    ++done;
  }
  CHECK(done == 250);
}

TEST_CASE("spectra") {
  EqClass phiA;
  phiA.add(Rat(1, 6), EPoly::u_var());
  phiA.add(Rat(5, 6), EPoly::v_var());
  FracPoly sp = spectrum_poly(phiA.spe());
  REQUIRE(sp.size() == 2);
  CHECK(sp.at(Rat(5, 6)) == 1);
  CHECK(sp.at(Rat(7, 6)) == 1);
  CHECK(fracpoly_str(sp, "t") == "t^(5/6)+t^(7/6)");
  CHECK(fracpoly_str(FracPoly{}, "t") == "0");
  FracPoly withconst{{Rat(0), Int(2)}, {Rat(1), Int(-1)}};
  CHECK(fracpoly_str(withconst, "t") == "2-t");
}
