#include "sgpd/inverse.hpp"

#include <sstream>
#include <stdexcept>

namespace sgpd {

InverseResult check_inverse(const PartialTable& t) {
  InverseResult result;
  const int n = t.size();

  std::vector<std::vector<Id>> pseudo(n);
  for (Id s = 0; s < n; ++s) {
    for (Id u = 0; u < n; ++u) {
      auto su = t.product(s, u);
      auto us = t.product(u, s);
      if (!su || !us) continue;
      auto sus = t.product(*su, s);
      auto usu = t.product(*us, u);
      if (sus && usu && *sus == s && *usu == u) pseudo[s].push_back(u);
    }
  }

  result.regular = true;
  bool unique = true;
  for (Id s = 0; s < n; ++s) {
    if (pseudo[s].empty()) {
      result.regular = false;
      unique = false;
      result.report.add("inv-exists", {s}, "no pseudo-inverse");
    } else if (pseudo[s].size() > 1) {
      unique = false;
      std::ostringstream os;
      os << "pseudo-inverses";
      for (Id u : pseudo[s]) os << " " << u;
      result.report.add("inv-unique", {s, pseudo[s][0], pseudo[s][1]}, os.str());
    }
  }

  std::vector<Id> idempotents;
  for (Id e = 0; e < n; ++e) {
    auto p = t.product(e, e);
    if (p && *p == e) idempotents.push_back(e);
  }
  result.idempotents_commute = true;
  for (Id e : idempotents) {
    for (Id f : idempotents) {
      auto p = t.product(e, f);
      if (!p) continue;
      auto q = t.product(f, e);
      if (!q || *q != *p) result.idempotents_commute = false;
    }
  }

  if (result.regular && unique != result.idempotents_commute) {
    throw std::logic_error("inverse <=> regular + commuting idempotents failed");
  }

  if (unique) {
    std::vector<Id> inv(n);
    for (Id s = 0; s < n; ++s) inv[s] = pseudo[s][0];
    for (Id s = 0; s < n; ++s) {
      if (inv[inv[s]] != s) throw std::logic_error("pseudo-inversion is not an involution");
    }
    UnaryStructure canonical;
    canonical.table = t;
    std::vector<Id> plus(n), star(n);
    for (Id s = 0; s < n; ++s) {
      plus[s] = t.at(s, inv[s]);
      star[s] = t.at(inv[s], s);
    }
    canonical.plus = plus;
    canonical.star = star;
    result.inverse = std::move(inv);
    result.canonical = std::move(canonical);
  }
  return result;
}

}  // namespace sgpd
