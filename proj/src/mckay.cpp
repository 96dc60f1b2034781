#include "motivica/mckay.hpp"

#include <set>

#include "motivica/errors.hpp"
#include "motivica/zeta.hpp"

namespace motivica {

Rat age(const std::vector<long>& a, long m) {
  if (m < 1) throw ValidationError("group order parameter m must be >= 1");
  Rat acc = 0;
  for (long x : a) {
    long r = x % m;
    if (r < 0) r += m;
    acc += Rat(r, m);
  }
  acc.canonicalize();
  return acc;
}

std::vector<std::vector<long>> group_elements(const AbelianGroup& g) {
  if (g.m < 1) throw ValidationError("group order parameter m must be >= 1");
  if (g.dim < 1) throw ValidationError("group dim must be >= 1");
  for (const auto& gen : g.generators)
    if (static_cast<long>(gen.size()) != g.dim)
      throw ValidationError("generator length must equal dim");
  std::set<std::vector<long>> seen;
  std::vector<std::vector<long>> queue;
  std::vector<long> zero(static_cast<size_t>(g.dim), 0);
  seen.insert(zero);
  queue.push_back(zero);
  for (size_t head = 0; head < queue.size(); ++head) {
    std::vector<long> cur = queue[head];
    for (const auto& gen : g.generators) {
      std::vector<long> next(cur);
      for (size_t j = 0; j < next.size(); ++j) {
        next[j] = (next[j] + gen[j]) % g.m;
        if (next[j] < 0) next[j] += g.m;
      }
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return std::vector<std::vector<long>>(seen.begin(), seen.end());
}

EPoly orbifold_weight(const AbelianGroup& g) {
  EPoly out;
  for (const auto& el : group_elements(g)) {
    long fix = 0;
    for (long x : el)
      if (x % g.m == 0) ++fix;
    Rat e = Rat(fix) + age(el, g.m);
    out += EPoly::Lpow(e);
  }
  return out;
}

McKayReport mckay_compare(const AbelianGroup& g, const Resolution& res) {
  McKayReport rep;
  EPoly w = orbifold_weight(g);
  EPoly s = stringy_class(res);
  rep.difference = w - s;
  rep.equal = rep.difference.is_zero();
  return rep;
}

}  // namespace motivica
