#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "motivica/epoly.hpp"
#include "motivica/errors.hpp"
#include "test_util.hpp"

using namespace motivica;
using testutil::Rng;
using testutil::random_epoly;
using testutil::random_uv_poly;

TEST_CASE("constructors and named classes") {
  CHECK(EPoly().is_zero());
  CHECK(EPoly(0).is_zero());
  CHECK(EPoly(1).is_one());
  CHECK_FALSE(EPoly(2).is_one());
  CHECK(EPoly::L() == EPoly::u_var() * EPoly::v_var());
  CHECK(EPoly::Lpow(Rat(3)) == EPoly::L().pow(3));
  CHECK(EPoly::Lpow(Rat(1, 2)) * EPoly::Lpow(Rat(1, 2)) == EPoly::L());
  CHECK(EPoly::projective_space(1) == EPoly(1));
  CHECK(EPoly::projective_space(3) ==
        EPoly(1) + EPoly::L() + EPoly::Lpow(Rat(2)));
  // The affine plane minus a line: L^2 - L.
  EPoly e = EPoly::Lpow(Rat(2)) - EPoly::L();
  CHECK(e.euler() == 0);
}

TEST_CASE("canonical string forms") {
  CHECK(EPoly().str() == "0");
  CHECK(EPoly(-7).str() == "-7");
  CHECK((EPoly::L() - EPoly(1)).str() == "-1+u*v");
  CHECK((EPoly(1) - EPoly::u_var() - EPoly::v_var() + 2 * EPoly::L()).str() ==
        "1-v-u+2*u*v");
  CHECK(EPoly::monomial(Rat(2, 3), Rat(0)).str() == "u^(2/3)");
  CHECK(EPoly::monomial(Rat(-1), Rat(-1)).str() == "u^(-1)*v^(-1)");
  CHECK(EPoly::monomial(Rat(5, 6), Rat(7, 6)).str() == "u^(5/6)*v^(7/6)");
  // Ascending total degree, then ascending u-exponent.
  EPoly mixed = EPoly::v_var() + EPoly::u_var() + EPoly(1) + EPoly::L();
  CHECK(mixed.str() == "1+v+u+u*v");
  CHECK((EPoly::L() - EPoly(1)).latex() == "-1+uv");
  CHECK(EPoly::monomial(Rat(5, 6), Rat(1)).latex() == "u^{5/6}v");
}

TEST_CASE("coefficient access") {
  EPoly e = EPoly(3) - 2 * EPoly::monomial(Rat(1, 2), Rat(1, 3));
  CHECK(e.coeff(Rat(0), Rat(0)) == 3);
  CHECK(e.coeff(Rat(1, 2), Rat(1, 3)) == -2);
  CHECK(e.coeff(Rat(1), Rat(1)) == 0);
}

TEST_CASE("ring axioms hold on randomized operands") {
  Rng rng(0x5eed0001u);
  int checked = 0;
  for (int iter = 0; iter < 250; ++iter) {
    EPoly a = random_epoly(rng), b = random_epoly(rng), c = random_epoly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + EPoly() == a);
    CHECK(a * EPoly(1) == a);
    CHECK((a - a).is_zero());
    CHECK(-(-a) == a);
    ++checked;
  }
  CHECK(checked == 250);
}

TEST_CASE("powers") {
  Rng rng(0x5eed0002u);
  for (int iter = 0; iter < 50; ++iter) {
    EPoly a = random_epoly(rng);
    EPoly expect(1);
    for (long k = 0; k <= 4; ++k) {
      CHECK(a.pow(k) == expect);
      expect = expect * a;
    }
  }
  // Negative powers only for monomials.
  EPoly m = EPoly::monomial(Rat(2), Rat(1));
  CHECK(m.pow(-2) == EPoly::monomial(Rat(-4), Rat(-2)));
  CHECK(m.pow(-1) * m == EPoly(1));
  CHECK_THROWS_AS((EPoly(1) + EPoly::u_var()).pow(-1), ParseError);
}

TEST_CASE("specializations are ring homomorphisms") {
  Rng rng(0x5eed0003u);
  for (int iter = 0; iter < 200; ++iter) {
    EPoly a = random_epoly(rng), b = random_epoly(rng);
    CHECK(a.euler() * b.euler() == (a * b).euler());
    CHECK(a.euler() + b.euler() == (a + b).euler());
    CHECK(a.swap_uv().swap_uv() == a);
    CHECK((a * b).swap_uv() == a.swap_uv() * b.swap_uv());
    CHECK((a + b).swap_uv() == a.swap_uv() + b.swap_uv());
  }
  CHECK(EPoly::projective_space(4).euler() == 4);
  CHECK(EPoly::u_var().swap_uv() == EPoly::v_var());
}

TEST_CASE("weight collapses u and v to a single grading") {
  EPoly e = EPoly::monomial(Rat(2), Rat(1)) + EPoly::monomial(Rat(1), Rat(2)) -
            EPoly(5);
  auto w = e.weight();
  REQUIRE(w.size() == 2);
  CHECK(w.at(Rat(0)) == -5);
  CHECK(w.at(Rat(3)) == 2);
}

TEST_CASE("substitution v -> 1/u reduces modulo L - 1") {
  // Multiples of L - 1 die under v -> u^{-1}.
  Rng rng(0x5eed0004u);
  for (int iter = 0; iter < 200; ++iter) {
    EPoly a = random_epoly(rng);
    EPoly killed = a * (EPoly::L() - EPoly(1));
    CHECK(killed.subs_v_uinv().empty());
  }
  EPoly e = EPoly::u_var() + EPoly::v_var();
  auto s = e.subs_v_uinv();
  REQUIRE(s.size() == 2);
  CHECK(s.at(Rat(1)) == 1);
  CHECK(s.at(Rat(-1)) == 1);
}

TEST_CASE("diagonal exponents require a Tate class") {
  EPoly tate = EPoly::L() + 3 * EPoly::Lpow(Rat(2)) - EPoly(1);
  auto d = tate.diagonal_exponents();
  REQUIRE(d.size() == 3);
  CHECK(d.at(Rat(0)) == -1);
  CHECK(d.at(Rat(1)) == 1);
  CHECK(d.at(Rat(2)) == 3);
  CHECK_THROWS_AS(EPoly::u_var().diagonal_exponents(), NonTateClass);
  CHECK(tate.is_uv_univariate());
  CHECK_FALSE((tate + EPoly::u_var()).is_uv_univariate());
}

TEST_CASE("denominator bound") {
  CHECK(EPoly(7).denominator_bound() == 1);
  CHECK(EPoly::Lpow(Rat(1, 6)).denominator_bound() == 6);
  CHECK((EPoly::monomial(Rat(1, 2), Rat(0)) +
         EPoly::monomial(Rat(1, 3), Rat(0)))
            .denominator_bound() == 6);
}

TEST_CASE("exact division") {
  EPoly L = EPoly::L();
  CHECK((L.pow(2) - EPoly(1)).exact_div(L - EPoly(1)) == L + EPoly(1));
  Rng rng(0x5eed0005u);
  for (int iter = 0; iter < 200; ++iter) {
    EPoly a = random_epoly(rng);
    EPoly b = random_uv_poly(rng);
    CHECK((a * b).exact_div(b) == a);
  }
  CHECK_THROWS_AS(EPoly::u_var().exact_div(L - EPoly(1)), NonDivisible);
  CHECK_THROWS_AS(EPoly(1).exact_div(EPoly()), NonDivisible);
  CHECK_THROWS_AS(EPoly(3).exact_div(EPoly(2)), NonDivisible);
  // Divisor with a non-diagonal term is rejected.
  CHECK_THROWS_AS((EPoly::u_var() * (L - EPoly(1))).exact_div(EPoly::u_var()),
                  NonDivisible);
  // Fractional uv powers divide cleanly.
  EPoly half = EPoly::Lpow(Rat(1, 2));
  CHECK((L - EPoly(1)).exact_div(half - EPoly(1)) == half + EPoly(1));
}
