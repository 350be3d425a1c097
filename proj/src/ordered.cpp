#include "sgpd/ordered.hpp"

namespace sgpd {

OrderedResult check_ordered(const FiniteCategory& c, const OrderRel& o, OrderedMode mode) {
  validate_category(c);
  if (o.size() != c.size()) throw InputError("order size mismatch");

  OrderedResult result;
  Report& rep = result.report;
  rep.merge("order", check_partial_order(o));
  if (!rep.pass()) return result;

  const int n = c.size();
  for (Id x = 0; x < n; ++x) {
    for (Id y = 0; y < n; ++y) {
      if (!o.leq(x, y)) continue;
      if (!o.leq(c.dom[x], c.dom[y]) || !o.leq(c.ran[x], c.ran[y])) rep.add("O1", {x, y});
    }
  }
  for (Id x = 0; x < n; ++x) {
    for (Id y = 0; y < n; ++y) {
      if (!o.leq(x, y)) continue;
      for (Id xp = 0; xp < n; ++xp) {
        for (Id yp = 0; yp < n; ++yp) {
          if (!o.leq(xp, yp)) continue;
          auto a = c.comp.product(x, xp);
          auto b = c.comp.product(y, yp);
          if (a && b && !o.leq(*a, *b)) rep.add("O2", {x, xp, y, yp});
        }
      }
    }
  }

  if (mode == OrderedMode::WithRestrictions) {
    std::vector<std::vector<int>> table(n, std::vector<int>(n, -1));
    for (Id x = 0; x < n; ++x) {
      for (Id e : c.objects) {
        if (!o.leq(e, c.dom[x])) continue;
        std::vector<Id> found;
        for (Id z = 0; z < n; ++z) {
          if (o.leq(z, x) && c.dom[z] == e) found.push_back(z);
        }
        if (found.empty()) rep.add("Or-exists", {x, e});
        else if (found.size() > 1) rep.add("Or-unique", {x, e, found[0], found[1]});
        else table[x][e] = found[0];
      }
    }
    if (rep.pass()) {
      for (Id x = 0; x < n; ++x) {
        for (Id y = 0; y < n; ++y) {
          bool via = o.leq(c.dom[x], c.dom[y]) && table[y][c.dom[x]] == x;
          if (o.leq(x, y) != via) rep.add("order-char", {x, y});
        }
      }
    }
    result.restriction = std::move(table);
  }

  if (mode == OrderedMode::WithCorestrictions) {
    std::vector<std::vector<int>> table(n, std::vector<int>(n, -1));
    for (Id x = 0; x < n; ++x) {
      for (Id e : c.objects) {
        if (!o.leq(e, c.ran[x])) continue;
        std::vector<Id> found;
        for (Id z = 0; z < n; ++z) {
          if (o.leq(z, x) && c.ran[z] == e) found.push_back(z);
        }
        if (found.empty()) rep.add("Oc-exists", {x, e});
        else if (found.size() > 1) rep.add("Oc-unique", {x, e, found[0], found[1]});
        else table[e][x] = found[0];
      }
    }
    if (rep.pass()) {
      for (Id x = 0; x < n; ++x) {
        for (Id y = 0; y < n; ++y) {
          bool via = o.leq(c.ran[x], c.ran[y]) && table[c.ran[x]][y] == x;
          if (o.leq(x, y) != via) rep.add("order-char", {x, y});
        }
      }
    }
    result.corestriction = std::move(table);
  }

  return result;
}

}  // namespace sgpd
