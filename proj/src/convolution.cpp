#include "motivica/convolution.hpp"

#include <algorithm>
#include <set>

#include "motivica/errors.hpp"

namespace motivica {

MRat<EPoly> augmented_series(const MRat<EqClass>& m) {
  MRat<EPoly> out(m.r());
  for (const auto& [fs, num] : m.terms())
    for (const auto& [mono, c] : num) out.add_term(fs, mono, c.aug());
  return out;
}

EPoly measure_mass(const MRat<EqClass>& m) {
  EFrac a1 = mrat_eval_one(augmented_series(m));
  EPoly Lm1 = EPoly::L() - EPoly(1);
  return EFrac{a1.num * Lm1, a1.den}.finalize();
}

std::vector<EqClass> measure_coefficients(const MRat<EqClass>& m, long K) {
  if (m.r() != 1) throw ValidationError("measures require exactly one T parameter");
  if (K < 0) throw ValidationError("order must be nonnegative");
  auto ex = m.expand(K);
  std::vector<EqClass> out(static_cast<size_t>(K) + 1);
  for (const auto& [mono, c] : ex) {
    if (mono[0] < 0)
      throw ValidationError("measure has a coefficient at negative order " +
                            std::to_string(mono[0]));
    if (mono[0] == 0)
      throw ValidationError("measure has a nonzero coefficient at order 0");
    out[static_cast<size_t>(mono[0])] = c;
  }
  return out;
}

std::vector<EqClass> convolve_coefficients(const MRat<EqClass>& a,
                                           const MRat<EqClass>& b, long K) {
  std::vector<EqClass> ca = measure_coefficients(a, K);
  std::vector<EqClass> cb = measure_coefficients(b, K);
  EFrac a1a = mrat_eval_one(augmented_series(a));
  EFrac a1b = mrat_eval_one(augmented_series(b));
  EPoly Lm1 = EPoly::L() - EPoly(1);

  std::vector<EqClass> out(static_cast<size_t>(K) + 1);
  EPoly prefA, prefB;  // running partial sums of the augmentations
  for (long n = 1; n <= K; ++n) {
    prefA += ca[n].aug();
    prefB += cb[n].aug();
    std::map<Rat, EFrac> acc;
    // head: minus the quasi-convolution of the order-n coefficients
    EqClass head = quasi_conv(ca[n], cb[n]);
    for (const auto& [chr, e] : head.parts()) acc[chr] = acc[chr] - EFrac{e};
    // middle: (L-1) sum_{i<=n} L^{i-n} aug(a_i b_i), character zero
    EPoly mid;
    for (long i = 1; i <= n; ++i)
      mid += (ca[i] * cb[i]).aug() * EPoly::Lpow(Rat(i - n));
    if (!mid.is_zero()) acc[Rat(0)] = acc[Rat(0)] + EFrac{mid * Lm1};
    // tails: (L-1) (a_n sum_{i>n} aug(b_i) + sum_{i>n} aug(a_i) b_n)
    EFrac tailA = a1a - EFrac{prefA};
    EFrac tailB = a1b - EFrac{prefB};
    for (const auto& [chr, e] : ca[n].parts())
      acc[chr] = acc[chr] + tailB.scaled(e * Lm1);
    for (const auto& [chr, e] : cb[n].parts())
      acc[chr] = acc[chr] + tailA.scaled(e * Lm1);
    EqClass cn;
    for (const auto& [chr, fr] : acc) {
      EPoly v = fr.finalize();
      if (!v.is_zero()) cn.add(chr, v);
    }
    out[static_cast<size_t>(n)] = cn;
  }
  return out;
}

namespace {

FactorSet convolution_candidates(const MRat<EqClass>& a, const MRat<EqClass>& b) {
  auto fa = factor_multiplicities(a);
  auto fb = factor_multiplicities(b);
  std::map<MRatFactor, int> merged;
  for (const auto& [f, k] : fa) merged[f] = std::max(merged[f], k);
  for (const auto& [f, k] : fb) merged[f] = std::max(merged[f], k);
  std::map<MRatFactor, int> combos;
  for (const auto& f : hadamard_candidates(fa, fb)) combos[f]++;
  for (const auto& [f, k] : combos) merged[f] = std::max(merged[f], k);
  // geometric-sum factor from the middle term, squared for safety
  MRatFactor geo{1, {1}};
  merged[geo] = std::max(merged[geo], 2);
  FactorSet out;
  for (const auto& [f, k] : merged)
    for (int i = 0; i < k; ++i) out.insert(f);
  return out;
}

}  // namespace

MRat<EqClass> convolve(const MRat<EqClass>& a, const MRat<EqClass>& b, long K) {
  std::vector<EqClass> h = convolve_coefficients(a, b, K);
  return reconstruct_series(h, convolution_candidates(a, b));
}

EqClass ts_infinity(const MRat<EqClass>& a, const MRat<EqClass>& b, long K) {
  EPoly ma = measure_mass(a);
  if (!ma.is_zero())
    throw NotMassless("first measure has mass " + ma.str());
  EPoly mb = measure_mass(b);
  if (!mb.is_zero())
    throw NotMassless("second measure has mass " + mb.str());
  EqClass va = a.eval_infinity();
  EqClass vb = b.eval_infinity();
  EqClass expect = quasi_conv(va, vb);
  MRat<EqClass> conv = convolve(a, b, K);
  EqClass got = conv.eval_infinity();
  if (!(got == expect))
    throw ReconstructionFailed(
        "reconstructed convolution disagrees at infinity with the "
        "quasi-convolution of the limits");
  return expect;
}

namespace {

void require_measure_keys(const Json& j, const std::set<std::string>& required,
                          const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + " must be an object");
  for (const auto& key : required)
    if (!j.contains(key)) throw SchemaError(where + " is missing key '" + key + "'");
  for (const auto& [key, v] : j.items()) {
    (void)v;
    if (!required.count(key))
      throw SchemaError(where + " has unexpected key '" + key + "'");
  }
}

long measure_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw SchemaError(where + " must be an integer");
  return j.get<long>();
}

std::vector<long> measure_int_vec(const Json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + " must be an array of integers");
  std::vector<long> out;
  for (const auto& e : j) out.push_back(measure_int(e, where + " entry"));
  return out;
}

}  // namespace

MRat<EqClass> measure_from_json(const Json& j) {
  require_measure_keys(j, {"r", "terms"}, "measure");
  long r = measure_int(j.at("r"), "r");
  if (r != 1) throw ValidationError("measures require r = 1");
  if (!j.at("terms").is_array()) throw SchemaError("terms must be an array");
  MRat<EqClass> out(1);
  for (const auto& tj : j.at("terms")) {
    require_measure_keys(tj, {"factors", "numerator"}, "term");
    if (!tj.at("factors").is_array()) throw SchemaError("factors must be an array");
    FactorSet fs;
    for (const auto& fj : tj.at("factors")) {
      require_measure_keys(fj, {"nu", "N"}, "factor");
      MRatFactor f;
      f.nu = measure_int(fj.at("nu"), "factor nu");
      f.N = measure_int_vec(fj.at("N"), "factor N");
      fs.insert(f);
    }
    if (!tj.at("numerator").is_array()) throw SchemaError("numerator must be an array");
    for (const auto& cj : tj.at("numerator")) {
      require_measure_keys(cj, {"T", "coeff"}, "numerator entry");
      Mono mono = measure_int_vec(cj.at("T"), "T");
      if (!cj.at("coeff").is_string()) throw SchemaError("coeff must be a string");
      EqClass c = parse_eqclass(cj.at("coeff").get<std::string>());
      out.add_term(fs, mono, c);
    }
  }
  return out;
}

Json measure_to_json(const MRat<EqClass>& m) {
  Json j;
  j["r"] = m.r();
  j["terms"] = Json::array();
  for (const auto& [fs, num] : m.terms()) {
    Json tj;
    tj["factors"] = Json::array();
    for (const auto& f : fs) {
      Json fj;
      fj["nu"] = f.nu;
      fj["N"] = f.N;
      tj["factors"].push_back(fj);
    }
    tj["numerator"] = Json::array();
    for (const auto& [mono, c] : num) {
      Json cj;
      cj["T"] = mono;
      cj["coeff"] = c.str();
      tj["numerator"].push_back(cj);
    }
    j["terms"].push_back(tj);
  }
  return j;
}

}  // namespace motivica
