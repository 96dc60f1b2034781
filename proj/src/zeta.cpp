#include "motivica/zeta.hpp"

#include <algorithm>
#include <set>

#include "motivica/errors.hpp"

namespace motivica {

namespace {

bool touches_exceptional(const Resolution& res, const Stratum& st) {
  for (const auto& id : st.comps)
    if (res.component(id).exceptional) return true;
  return false;
}

bool select_plain(const Resolution& res, const Stratum& st, Mode mode) {
  (void)res;
  return mode == Mode::Global || st.over_locus;
}

bool select_igusa(const Resolution& res, const Stratum& st, Mode mode) {
  return mode == Mode::Global || st.over_locus || touches_exceptional(res, st);
}

long integer_nu(const Component& c) {
  if (!rat_is_integer(c.nu))
    throw ValidationError("component '" + c.id + "' has non-integer nu " + rat_str(c.nu) +
                          "; this operation needs integer weights");
  return to_long(rat_num(c.nu), "nu");
}

MRatFactor component_factor(const Resolution& res, const Component& c) {
  MRatFactor f;
  f.nu = integer_nu(c);
  f.N = c.N;
  bool any = false;
  for (long n : c.N) any = any || n > 0;
  if (!any)
    throw ValidationError("component '" + c.id +
                          "' has zero multiplicity everywhere but appears in a selected stratum");
  (void)res;
  return f;
}

template <class Sel>
MRat<EPoly> contact_sum(const Resolution& res, Sel sel) {
  if (res.r < 1) throw ValidationError("operation requires at least one T parameter");
  MRat<EPoly> out(static_cast<int>(res.r));
  EPoly Lm1 = EPoly::L() - EPoly(1);
  bool any = false;
  for (const auto& st : res.strata) {
    if (!sel(st)) continue;
    any = true;
    FactorSet fs;
    EPoly coeff = st.epoly;
    for (const auto& id : st.comps) {
      fs.insert(component_factor(res, res.component(id)));
      coeff = coeff * Lm1;
    }
    out.add_term(fs, Mono(res.r, 0), coeff);
  }
  if (!any) throw MissingStratum("no strata selected for this operation");
  return out;
}

}  // namespace

MRat<EPoly> contact_series(const Resolution& res, Mode mode) {
  require_valid(res);
  return contact_sum(res, [&](const Stratum& st) { return select_plain(res, st, mode); });
}

MRat<EPoly> dl_zeta(const Resolution& res, Mode mode) {
  require_valid(res);
  MRat<EPoly> sum =
      contact_sum(res, [&](const Stratum& st) { return select_igusa(res, st, mode); });
  return sum.scale(EPoly::Lpow(Rat(-res.dim)));
}

MRat<EqClass> nearby_series(const Resolution& res) {
  require_valid(res);
  if (res.r != 1) throw ValidationError("nearby cycles require exactly one T parameter");
  MRat<EqClass> out(1);
  EPoly Lm1 = EPoly::L() - EPoly(1);
  bool any = false;
  for (const auto& st : res.strata) {
    if (!st.over_locus) continue;
    any = true;
    if (!st.cover)
      throw MissingCover("over-locus stratum " + st.label() + " has no cover");
    FactorSet fs;
    for (const auto& id : st.comps) fs.insert(component_factor(res, res.component(id)));
    EPoly scale(1);
    for (size_t i = 1; i < st.comps.size(); ++i) scale = scale * Lm1;
    out.add_term(fs, Mono(1, 0), st.cover->chars.scale(scale));
  }
  if (!any) throw MissingStratum("no over-locus strata");
  return out;
}

EqClass psi_class(const Resolution& res) { return -nearby_series(res).eval_infinity(); }

EqClass phi_class(const Resolution& res) {
  EqClass psi = psi_class(res);
  return psi - EqClass(psi.aug());
}

FracPoly spectrum_class(const Resolution& res) {
  return spectrum_poly(phi_class(res).spe());
}

namespace {

// Qualifying singletons for monodromy-type operations.
std::vector<const Stratum*> monodromy_singletons(const Resolution& res) {
  std::vector<const Stratum*> out;
  for (const auto& st : res.strata) {
    if (st.comps.size() != 1) continue;
    const Component& c = res.component(st.comps[0]);
    if (!(c.exceptional || st.over_locus)) continue;
    out.push_back(&st);
  }
  return out;
}

}  // namespace

Int lambda_n(const Resolution& res, long n) {
  require_valid(res);
  if (res.r != 1) throw ValidationError("arc-Euler characteristics require r = 1");
  if (n < 1) throw ValidationError("n must be >= 1");
  Int acc = 0;
  for (const Stratum* st : monodromy_singletons(res)) {
    long N = res.component(st->comps[0]).N.at(0);
    if (N >= 1 && n % N == 0) acc += Int(N) * st->epoly.euler();
  }
  return acc;
}

RatFun monodromy_zeta(const Resolution& res) {
  require_valid(res);
  if (res.r != 1) throw ValidationError("monodromy zeta requires r = 1");
  auto singles = monodromy_singletons(res);
  if (singles.empty()) throw MissingStratum("no qualifying singleton strata");
  ZPoly num = zp_one();
  ZPoly den = zp_one();
  for (const Stratum* st : singles) {
    long N = res.component(st->comps[0]).N.at(0);
    if (N < 1) continue;
    Int chi = st->epoly.euler();
    ZPoly f;
    zp_add_term(f, 0, 1);
    zp_add_term(f, N, -1);
    long k = to_long(abs(chi), "chi");
    if (chi > 0)
      den = zp_mul(den, zp_pow(f, k));
    else if (chi < 0)
      num = zp_mul(num, zp_pow(f, k));
  }
  return RatFun::make(qp_from_zp(num), qp_from_zp(den), "t");
}

SRational topological_zeta(const Resolution& res, Mode mode) {
  require_valid(res);
  if (res.r != 1) throw ValidationError("topological zeta requires r = 1");
  std::vector<const Stratum*> selected;
  for (const auto& st : res.strata)
    if (select_plain(res, st, mode)) selected.push_back(&st);
  if (selected.empty()) throw MissingStratum("no strata selected for this operation");

  // components used anywhere in the selection
  std::set<std::string> used;
  for (const Stratum* st : selected)
    for (const auto& id : st->comps) used.insert(id);

  // common denominator prod over used components of (nu + N s)
  QPoly den{{0, Rat(1)}};
  std::vector<std::pair<Int, Int>> candidates;
  std::map<std::string, QPoly> linear;
  for (const auto& id : used) {
    const Component& c = res.component(id);
    QPoly lin;
    lin[0] = c.nu;
    if (c.N.at(0) != 0) lin[1] = Rat(c.N.at(0));
    linear[id] = lin;
    den = qp_mul(den, lin);
    candidates.emplace_back(rat_num(c.nu), rat_den(c.nu) * Int(c.N.at(0)));
  }
  QPoly num;
  for (const Stratum* st : selected) {
    Int chi = st->epoly.euler();
    if (chi == 0) continue;
    QPoly term{{0, Rat(chi)}};
    std::set<std::string> inI(st->comps.begin(), st->comps.end());
    for (const auto& id : used)
      if (!inI.count(id)) term = qp_mul(term, linear[id]);
    num = qp_add(num, term);
  }
  return SRational::make(num, den, candidates);
}

Rat euler_value(const Resolution& res, Mode mode) {
  require_valid(res);
  bool any = false;
  Rat acc = 0;
  for (const auto& st : res.strata) {
    if (!select_plain(res, st, mode)) continue;
    any = true;
    Rat term(st.epoly.euler());
    for (const auto& id : st.comps) term /= res.component(id).nu;
    acc += term;
  }
  if (!any) throw MissingStratum("no strata selected for this operation");
  acc.canonicalize();
  return acc;
}

EPoly stringy_class(const Resolution& res) {
  require_valid(res);
  if (res.strata.empty()) throw MissingStratum("resolution has no strata");
  std::set<std::string> used;
  for (const auto& st : res.strata)
    for (const auto& id : st.comps) used.insert(id);
  EPoly den(1);
  std::map<std::string, EPoly> dfac;
  for (const auto& id : used) {
    EPoly f = EPoly::Lpow(res.component(id).nu) - EPoly(1);
    dfac[id] = f;
    den *= f;
  }
  EPoly Lm1 = EPoly::L() - EPoly(1);
  EPoly num;
  for (const auto& st : res.strata) {
    EPoly term = st.epoly;
    std::set<std::string> inI(st.comps.begin(), st.comps.end());
    for (const auto& id : used)
      term = term * (inI.count(id) ? Lm1 : dfac[id]);
    num += term;
  }
  if (num.is_zero()) return EPoly();
  return num.exact_div(den);
}

EPoly pushforward_closed(const Resolution& res) {
  require_valid(res);
  std::vector<const Component*> irr;
  for (const auto& c : res.components) {
    long nu = integer_nu(c);
    if (nu >= 2) irr.push_back(&c);
  }
  size_t k = irr.size();
  EPoly den(1);
  std::vector<EPoly> denfac(k), numfac(k);
  for (size_t i = 0; i < k; ++i) {
    long nu = to_long(rat_num(irr[i]->nu), "nu");
    denfac[i] = EPoly::projective_space(nu);      // [P^{nu-1}]
    numfac[i] = EPoly::projective_space(nu - 1);  // [P^{nu-2}]
    den *= denfac[i];
  }
  EPoly num;
  EPoly negL = -EPoly::L();
  for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
    // closed stratum class [E_I] = sum over strata containing I
    std::set<std::string> I;
    for (size_t i = 0; i < k; ++i)
      if (mask & (size_t{1} << i)) I.insert(irr[i]->id);
    EPoly closed;
    for (const auto& st : res.strata) {
      std::set<std::string> J(st.comps.begin(), st.comps.end());
      if (std::includes(J.begin(), J.end(), I.begin(), I.end())) closed += st.epoly;
    }
    if (closed.is_zero()) continue;
    EPoly term = closed;
    for (size_t i = 0; i < k; ++i) {
      if (mask & (size_t{1} << i))
        term = term * negL * numfac[i];
      else
        term = term * denfac[i];
    }
    num += term;
  }
  if (num.is_zero()) return EPoly();
  return num.exact_div(den);
}

QT igusa_zeta(const Resolution& res, Mode mode) {
  require_valid(res);
  if (res.r != 1) throw ValidationError("this zeta requires exactly one T parameter");
  std::vector<const Stratum*> selected;
  for (const auto& st : res.strata)
    if (select_igusa(res, st, mode)) selected.push_back(&st);
  if (selected.empty()) throw MissingStratum("no strata selected for this operation");

  std::set<std::string> used;
  for (const Stratum* st : selected) {
    if (!st->count)
      throw MissingCounts("stratum " + st->label() + " has no point count");
    for (const auto& id : st->comps) used.insert(id);
  }

  QT out;
  out.qpow = res.dim;
  std::map<std::string, std::pair<long, long>> fac;  // id -> (nu, N)
  for (const auto& id : used) {
    const Component& c = res.component(id);
    fac[id] = {integer_nu(c), c.N.at(0)};
    out.factors.insert(fac[id]);
  }
  using Bi = std::map<std::pair<long, long>, Int>;
  auto bi_mul = [](const Bi& a, const Bi& b) {
    Bi r;
    for (const auto& [ka, ca] : a)
      for (const auto& [kb, cb] : b) {
        auto key = std::make_pair(ka.first + kb.first, ka.second + kb.second);
        r[key] += ca * cb;
        if (r[key] == 0) r.erase(key);
      }
    return r;
  };
  Bi total;
  for (const Stratum* st : selected) {
    Bi term;
    for (const auto& [e, c] : *st->count) term[{e, 0}] = c;
    std::set<std::string> inI(st->comps.begin(), st->comps.end());
    for (const auto& id : used) {
      auto [nu, N] = fac[id];
      Bi f;
      if (inI.count(id)) {
        // (q - 1) t^N
        f[{1, N}] = 1;
        f[{0, N}] = -1;
      } else {
        // (q^nu - t^N)
        f[{nu, 0}] = 1;
        f[{0, N}] += -1;
      }
      term = bi_mul(term, f);
    }
    for (const auto& [kx, c] : term) {
      total[kx] += c;
      if (total[kx] == 0) total.erase(kx);
    }
  }
  out.num = std::move(total);
  out.canonicalize();
  return out;
}

}  // namespace motivica
