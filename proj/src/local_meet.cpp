#include "sgpd/local_meet.hpp"

#include <algorithm>
#include <stdexcept>

namespace sgpd {

OrderRel derived_meet_order(const PartialTable& t) {
  OrderRel r(t.size());
  for (Id s = 0; s < t.size(); ++s) {
    for (Id u = 0; u < t.size(); ++u) {
      auto p = t.product(s, u);
      if (p && *p == s) r.set(s, u);
    }
  }
  return r;
}

LocalMeetResult check_local_meet_semilattice(const PartialTable& t) {
  LocalMeetResult result;
  Report& rep = result.report;
  const int n = t.size();

  rep.merge(check_associativity(t));
  for (Id e = 0; e < n; ++e) {
    auto p = t.product(e, e);
    if (!p || *p != e) rep.add("lms-idempotent", {e}, p ? "ee != e" : "ee undefined");
  }
  for (Id s = 0; s < n; ++s) {
    for (Id u = 0; u < n; ++u) {
      auto p = t.product(s, u);
      if (!p) continue;
      auto q = t.product(u, s);
      if (!q || *q != *p) {
        rep.add("lms-commutative", {s, u}, q ? "st != ts" : "ts undefined");
      }
    }
  }
  if (!rep.pass()) return result;

  // With the axioms established, definedness is an equivalence relation.
  for (Id s = 0; s < n; ++s) {
    for (Id u = 0; u < n; ++u) {
      if (!t.defined(s, u)) continue;
      for (Id r = 0; r < n; ++r) {
        if (t.defined(u, r) && !t.defined(s, r)) {
          throw std::logic_error("definedness relation not transitive on passing structure");
        }
      }
    }
  }

  std::vector<char> seen(n, 0);
  for (Id s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Id> block;
    for (Id u = 0; u < n; ++u) {
      if (t.defined(s, u)) {
        block.push_back(u);
        seen[u] = 1;
      }
    }
    result.blocks.push_back(std::move(block));
  }

  OrderRel order = derived_meet_order(t);
  if (!check_partial_order(order).pass()) {
    throw std::logic_error("meet order fails partial-order laws on passing structure");
  }

  PartialTable rebuilt(n);
  for (const auto& block : result.blocks) {
    for (Id s : block) {
      for (Id u : block) {
        if (!t.defined(s, u)) {
          throw std::logic_error("block not internally total on passing structure");
        }
        Id m = t.at(s, u);
        bool lower = order.leq(m, s) && order.leq(m, u);
        bool greatest = true;
        for (Id w : block) {
          if (order.leq(w, s) && order.leq(w, u) && !order.leq(w, m)) greatest = false;
        }
        if (!lower || !greatest) {
          throw std::logic_error("block product is not the meet on passing structure");
        }
        rebuilt.set(s, u, m);
      }
    }
  }
  if (rebuilt != t) {
    throw std::logic_error("order reconstruction differs from table on passing structure");
  }
  return result;
}

}  // namespace sgpd
