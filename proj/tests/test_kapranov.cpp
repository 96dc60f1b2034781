#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "motivica/errors.hpp"
#include "motivica/kapranov.hpp"
#include "test_util.hpp"

using namespace motivica;
using testutil::Rng;

namespace {
const EPoly u = EPoly::u_var();
const EPoly v = EPoly::v_var();

// Integer-exponent class for the product formula.
EPoly random_integral(Rng& rng) {
  EPoly e;
  int nt = static_cast<int>(rng.pick(1, 3));
  for (int i = 0; i < nt; ++i)
    e += EPoly::monomial(Rat(rng.pick(0, 2)), Rat(rng.pick(0, 2)),
                         Int(rng.pick(-2, 2)));
  return e;
}
}  // namespace

TEST_CASE("symmetric powers of points and lines") {
  auto pt = sym_powers(EPoly(1), 5);
  REQUIRE(pt.size() == 6);
  for (const auto& c : pt) CHECK(c == EPoly(1));

  // Sym^n P^1 = P^n (projective_space counts terms: 1 + L + ... + L^n).
  auto line = sym_powers(EPoly(1) + EPoly::L(), 4);
  for (long n = 0; n <= 4; ++n)
    CHECK(line[n] == EPoly::projective_space(n + 1));

  // The zero class has only Sym^0.
  auto zero = sym_powers(EPoly(), 3);
  CHECK(zero[0] == EPoly(1));
  CHECK(zero[1].is_zero());
  CHECK(zero[3].is_zero());

  // A negative line bundle class: (1 - L T) is a polynomial.
  auto neg = sym_powers(EPoly(0) - EPoly::L(), 3);
  CHECK(neg[1] == EPoly(0) - EPoly::L());
  CHECK(neg[2].is_zero());
  CHECK(neg[3].is_zero());

  CHECK_THROWS_AS(sym_powers(EPoly(1), -1), ValidationError);
  CHECK_THROWS_AS(sym_powers(EPoly::Lpow(Rat(1, 2)), 2), ValidationError);
}

TEST_CASE("genus-one symmetric square") {
  EPoly E = genus_curve_class(1);
  CHECK(E == EPoly(1) - u - v + EPoly::L());
  auto s = sym_powers(E, 2);
  EPoly expect = EPoly::projective_space(3) -
                 (u + v) * EPoly::projective_space(2) + EPoly::L();
  CHECK(s[2] == expect);
}

TEST_CASE("genus numerators and the functional equation") {
  auto p0 = genus_numerator(0, 2);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0] == EPoly(1));

  auto p1 = genus_numerator(1, 4);
  REQUIRE(p1.size() == 3);
  CHECK(p1[0] == EPoly(1));
  CHECK(p1[1].str() == "-v-u");
  CHECK(p1[2].str() == "u*v");

  auto p2 = genus_numerator(2, 8);
  REQUIRE(p2.size() == 5);
  CHECK(p2[1] == EPoly(-2) * (u + v));
  // Functional equation p_{2g-i} = L^{g-i} p_i.
  for (long g = 0; g <= 3; ++g) CHECK(functional_equation_check(g, 2 * g + 2));

  CHECK_THROWS_AS(genus_numerator(1, 3), ValidationError);
  CHECK_THROWS_AS(genus_numerator(-1, 4), ValidationError);
  CHECK_THROWS_AS(genus_curve_class(-2), ValidationError);
}

TEST_CASE("rationality certificates") {
  auto factors = parse_curve_factors("(1-T)(1-u*v*T)");
  REQUIRE(factors.size() == 2);
  CHECK(factors[0] == std::pair<long, long>{0, 0});
  CHECK(factors[1] == std::pair<long, long>{1, 1});

  // Genus 2 numerator has degree 4: certified from 7 coefficients on, an
  // honest refusal one short of that.
  EPoly C2 = genus_curve_class(2);
  CHECK(verify_rational(sym_powers(C2, 6), factors));
  CHECK_FALSE(verify_rational(sym_powers(C2, 5), factors));
  // A single factor cannot clear the series.
  CHECK_FALSE(verify_rational(sym_powers(C2, 6), parse_curve_factors("(1-T)")));

  // clear_factors is the numerator extraction underlying the certificate.
  auto cleared = clear_factors(sym_powers(genus_curve_class(1), 4), factors);
  CHECK(cleared[0] == EPoly(1));
  CHECK(cleared[1] == EPoly(0) - u - v);
  CHECK(cleared[2] == EPoly::L());
  CHECK(cleared[3].is_zero());
  CHECK(cleared[4].is_zero());

  CHECK(parse_curve_factors("(1-u^2*T)") ==
        std::vector<std::pair<long, long>>{{2, 0}});
  CHECK_THROWS_AS(parse_curve_factors(""), ParseError);
  CHECK_THROWS_AS(parse_curve_factors("1-T"), ParseError);
  CHECK_THROWS_AS(parse_curve_factors("(1-T"), ParseError);
  CHECK_THROWS_AS(parse_curve_factors("(1+T)"), ParseError);
  CHECK_THROWS_AS(parse_curve_factors("(2-T)"), ParseError);
  CHECK_THROWS_AS(parse_curve_factors("(1-T^2)"), ParseError);
  CHECK_THROWS_AS(parse_curve_factors("(1-T)(1-x*T)"), ParseError);
}

TEST_CASE("adams operations") {
  EPoly e = EPoly(1) + u + v * v;
  CHECK(adams(e, 1) == e);
  CHECK(adams(e, 2) == EPoly(1) + u * u + EPoly::monomial(0, 4));
  CHECK_THROWS_AS(adams(e, 0), ValidationError);

  Rng rng(20260816);
  for (int it = 0; it < 100; ++it) {
    EPoly a = testutil::random_epoly(rng);
    EPoly b = testutil::random_epoly(rng);
    long k = rng.pick(1, 4);
    long j = rng.pick(1, 3);
    CHECK(adams(a * b, k) == adams(a, k) * adams(b, k));
    CHECK(adams(a + b, k) == adams(a, k) + adams(b, k));
    CHECK(adams(adams(a, k), j) == adams(a, k * j));
  }
}

TEST_CASE("product formula agrees with the Newton recurrence") {
  Rng rng(816);
  for (int it = 0; it < 100; ++it) {
    EPoly e = random_integral(rng);
    auto a = sym_powers(e, 4);
    auto b = sym_powers_newton(e, 4);
    REQUIRE(a.size() == b.size());
    for (size_t n = 0; n < a.size(); ++n) CHECK(a[n] == b[n]);
  }

  // The recurrence also covers fractional exponents, where the monomials
  // act as independent variables.
  auto s = sym_powers_newton(EPoly::monomial(Rat(1, 2), 0) +
                                 EPoly::monomial(0, Rat(1, 2)),
                             3);
  CHECK(s[2] == EPoly::monomial(1, 0) +
                    EPoly::monomial(Rat(1, 2), Rat(1, 2)) +
                    EPoly::monomial(0, 1));
  CHECK(s[3] == EPoly::monomial(Rat(3, 2), 0) + EPoly::monomial(1, Rat(1, 2)) +
                    EPoly::monomial(Rat(1, 2), 1) +
                    EPoly::monomial(0, Rat(3, 2)));
}

TEST_CASE("multiplicativity and specializations") {
  Rng rng(424242);
  for (int it = 0; it < 100; ++it) {
    EPoly a = random_integral(rng);
    EPoly b = random_integral(rng);
    auto sa = sym_powers(a, 4);
    auto sb = sym_powers(b, 4);
    auto sab = sym_powers(a + b, 4);
    for (long n = 0; n <= 4; ++n) {
      EPoly acc;
      for (long j = 0; j <= n; ++j) acc += sa[j] * sb[n - j];
      CHECK(sab[n] == acc);
    }
    // Euler characteristics factor through the constant class.
    auto sc = sym_powers(EPoly(a.euler()), 4);
    for (long n = 0; n <= 4; ++n) CHECK(sa[n].euler() == sc[n].euler());
    // Hodge conjugation commutes with symmetric powers.
    auto sw = sym_powers(a.swap_uv(), 4);
    for (long n = 0; n <= 4; ++n) CHECK(sw[n] == sa[n].swap_uv());
  }
}
