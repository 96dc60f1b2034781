#include "motivica/kapranov.hpp"

#include <cstddef>

#include "motivica/errors.hpp"
#include "motivica/textio.hpp"

namespace motivica {

namespace {

Int binom(const Int& n, long k) {
  Int out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

// series *= (1 - x T)^{-e}, truncated at order K
void apply_factor(std::vector<EPoly>& series, const EPoly& x, const Int& e, long K) {
  std::vector<EPoly> fac(static_cast<size_t>(K) + 1);
  EPoly xn(1);
  for (long n = 0; n <= K; ++n) {
    if (e > 0) {
      fac[n] = xn * EPoly(binom(e + n - 1, n));
    } else {
      Int c = binom(-e, n);
      if (n % 2 == 1) c = -c;
      fac[n] = xn * EPoly(c);
    }
    if (e < 0 && Int(n) >= -e) {
      // (1 - xT)^{|e|} is a polynomial of degree |e|
      for (long m = n + 1; m <= K; ++m) fac[m] = EPoly();
      break;
    }
    xn = xn * x;
  }
  std::vector<EPoly> next(static_cast<size_t>(K) + 1);
  for (long i = 0; i <= K; ++i) {
    if (series[i].is_zero()) continue;
    for (long j = 0; i + j <= K; ++j) {
      if (fac[j].is_zero()) continue;
      next[i + j] += series[i] * fac[j];
    }
  }
  series = std::move(next);
}

}  // namespace

std::vector<EPoly> sym_powers(const EPoly& e, long K) {
  if (K < 0) throw ValidationError("order must be nonnegative");
  std::vector<EPoly> series(static_cast<size_t>(K) + 1);
  series[0] = EPoly(1);
  for (const auto& [expo, c] : e.terms()) {
    if (!rat_is_integer(expo.p) || !rat_is_integer(expo.q))
      throw ValidationError("symmetric powers require integer exponents");
    apply_factor(series, EPoly::monomial(expo.p, expo.q), c, K);
  }
  return series;
}

EPoly adams(const EPoly& e, long k) {
  if (k < 1) throw ValidationError("Adams operations require k >= 1");
  EPoly out;
  for (const auto& [expo, c] : e.terms())
    out += EPoly::monomial(expo.p * Rat(k), expo.q * Rat(k), c);
  return out;
}

std::vector<EPoly> sym_powers_newton(const EPoly& e, long K) {
  if (K < 0) throw ValidationError("order must be nonnegative");
  using QTerms = std::map<Expo, Rat, ExpoLess>;
  auto qadd = [](QTerms& t, const Expo& x, const Rat& c) {
    auto it = t.find(x);
    if (it == t.end()) {
      if (c != 0) t.emplace(x, c);
    } else {
      it->second += c;
      it->second.canonicalize();
      if (it->second == 0) t.erase(it);
    }
  };
  std::vector<EPoly> psi(static_cast<size_t>(K) + 1);
  for (long k = 1; k <= K; ++k) psi[k] = adams(e, k);
  std::vector<QTerms> Z(static_cast<size_t>(K) + 1);
  qadd(Z[0], Expo{Rat(0), Rat(0)}, Rat(1));
  for (long n = 1; n <= K; ++n) {
    QTerms acc;
    for (long k = 1; k <= n; ++k)
      for (const auto& [xp, cp] : psi[k].terms())
        for (const auto& [xz, cz] : Z[n - k])
          qadd(acc, Expo{xp.p + xz.p, xp.q + xz.q}, Rat(cp) * cz);
    for (auto& [x, c] : acc) {
      (void)x;
      c /= Rat(n);
      c.canonicalize();
    }
    Z[n] = std::move(acc);
  }
  std::vector<EPoly> out(static_cast<size_t>(K) + 1);
  for (long n = 0; n <= K; ++n) {
    for (const auto& [x, c] : Z[n]) {
      if (!rat_is_integer(c))
        throw NonIntegralExpansion("coefficient of order " + std::to_string(n) +
                                   " has non-integral part " + rat_str(c));
      out[n] += EPoly::monomial(x.p, x.q, rat_num(c));
    }
  }
  return out;
}

std::vector<EPoly> clear_factors(const std::vector<EPoly>& series,
                                 const std::vector<std::pair<long, long>>& factors) {
  std::vector<EPoly> p(series);
  long K = static_cast<long>(p.size()) - 1;
  for (const auto& [a, b] : factors) {
    EPoly x = EPoly::monomial(Rat(a), Rat(b));
    for (long n = K; n >= 1; --n) p[n] -= x * p[n - 1];
  }
  return p;
}

bool verify_rational(const std::vector<EPoly>& series,
                     const std::vector<std::pair<long, long>>& factors) {
  std::vector<EPoly> p = clear_factors(series, factors);
  long K = static_cast<long>(p.size()) - 1;
  long d = -1;
  for (long n = 0; n <= K; ++n)
    if (!p[n].is_zero()) d = n;
  return d <= K - static_cast<long>(factors.size());
}

std::vector<std::pair<long, long>> parse_curve_factors(const std::string& text) {
  std::vector<std::pair<long, long>> out;
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '*')) ++i;
  };
  skip();
  if (i >= text.size()) throw ParseError("expected at least one factor");
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in factor list");
    size_t depth = 1;
    size_t j = i + 1;
    while (j < text.size() && depth > 0) {
      if (text[j] == '(') ++depth;
      if (text[j] == ')') --depth;
      ++j;
    }
    if (depth != 0) throw ParseError("unbalanced parentheses in factor list");
    GPoly g = parse_poly_expr(text.substr(i + 1, j - i - 2));
    // shape: 1 - u^a v^b T
    if (g.terms.size() != 2) throw ParseError("factor must have the form 1 - u^a*v^b*T");
    long a = 0, b = 0;
    bool have_one = false, have_t = false;
    for (const auto& [mono, c] : g.terms) {
      if (mono.empty()) {
        if (c != 1) throw ParseError("factor must have constant term 1");
        have_one = true;
        continue;
      }
      if (c != -1) throw ParseError("factor must have the form 1 - u^a*v^b*T");
      for (const auto& [var, exp] : mono) {
        if (!rat_is_integer(exp) || exp < 0)
          throw ParseError("factor exponents must be nonnegative integers");
        long ev = to_long(rat_num(exp), "exponent");
        if (var == "T") {
          if (ev != 1) throw ParseError("factor must be linear in T");
          have_t = true;
        } else if (var == "u") {
          a = ev;
        } else if (var == "v") {
          b = ev;
        } else {
          throw ParseError("unknown variable '" + var + "' in factor");
        }
      }
    }
    if (!have_one || !have_t) throw ParseError("factor must have the form 1 - u^a*v^b*T");
    out.emplace_back(a, b);
    i = j;
    skip();
  }
  return out;
}

EPoly genus_curve_class(long g) {
  if (g < 0) throw ValidationError("genus must be nonnegative");
  EPoly e(1);
  e += EPoly::L();
  e -= EPoly::u_var() * EPoly(g);
  e -= EPoly::v_var() * EPoly(g);
  return e;
}

std::vector<EPoly> genus_numerator(long g, long K) {
  if (g < 0) throw ValidationError("genus must be nonnegative");
  if (K < 2 * g + 2)
    throw ValidationError("order must be at least 2g+2 = " + std::to_string(2 * g + 2));
  std::vector<EPoly> p = sym_powers(genus_curve_class(g), K);
  EPoly one(1);
  EPoly uv = EPoly::L();
  for (const EPoly& x : {one, uv})
    for (long n = K; n >= 1; --n) p[n] -= x * p[n - 1];
  for (long n = 2 * g + 1; n <= K; ++n)
    if (!p[n].is_zero())
      throw ReconstructionFailed(
          "series is not P(T)/((1-T)(1-L*T)) with deg P <= 2g");
  p.resize(static_cast<size_t>(2 * g) + 1);
  return p;
}

bool functional_equation_check(long g, long K) {
  std::vector<EPoly> p = genus_numerator(g, K);
  for (long i = 0; i <= 2 * g; ++i) {
    EPoly lhs = p[static_cast<size_t>(2 * g - i)];
    EPoly rhs = p[static_cast<size_t>(i)] * EPoly::Lpow(Rat(g - i));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace motivica
