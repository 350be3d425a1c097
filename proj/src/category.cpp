#include "sgpd/category.hpp"

#include <algorithm>

namespace sgpd {

bool FiniteCategory::is_object(Id e) const {
  return std::binary_search(objects.begin(), objects.end(), e);
}

void validate_category(const FiniteCategory& c) {
  const int n = c.size();
  if (!std::is_sorted(c.objects.begin(), c.objects.end()) ||
      std::adjacent_find(c.objects.begin(), c.objects.end()) != c.objects.end()) {
    throw InputError("object list must be strictly increasing");
  }
  for (Id e : c.objects) {
    if (e < 0 || e >= n) throw InputError("object id out of range");
  }
  if (static_cast<int>(c.dom.size()) != n || static_cast<int>(c.ran.size()) != n) {
    throw InputError("dom/ran map size mismatch");
  }
  for (Id x = 0; x < n; ++x) {
    if (!c.is_object(c.dom[x])) throw InputError("dom value is not an object");
    if (!c.is_object(c.ran[x])) throw InputError("ran value is not an object");
  }
}

Report check_category(const FiniteCategory& c) {
  validate_category(c);
  Report rep;
  const int n = c.size();

  for (Id x = 0; x < n; ++x) {
    for (Id y = 0; y < n; ++y) {
      bool should = c.dom[x] == c.ran[y];
      if (c.comp.defined(x, y) != should) {
        rep.add("C-def", {x, y}, should ? "composable pair undefined" : "spurious composite");
      }
    }
  }
  for (Id x = 0; x < n; ++x) {
    for (Id y = 0; y < n; ++y) {
      auto xy = c.comp.product(x, y);
      if (!xy) continue;
      if (c.dom[*xy] != c.dom[y] || c.ran[*xy] != c.ran[x]) rep.add("C1", {x, y});
    }
  }
  for (Id x = 0; x < n; ++x) {
    for (Id y = 0; y < n; ++y) {
      auto xy = c.comp.product(x, y);
      if (!xy) continue;
      for (Id z = 0; z < n; ++z) {
        auto yz = c.comp.product(y, z);
        if (!yz) continue;
        auto l = c.comp.product(*xy, z);
        auto r = c.comp.product(x, *yz);
        if (!l || !r || *l != *r) rep.add("C2", {x, y, z});
      }
    }
  }
  for (Id e : c.objects) {
    if (c.dom[e] != e || c.ran[e] != e) rep.add("C3", {e}, "identity not its own dom/ran");
  }
  for (Id x = 0; x < n; ++x) {
    Id e = c.dom[x];
    auto xe = c.comp.product(x, e);
    if (!xe || *xe != x) rep.add("C3", {x, e}, "x dom(x) != x");
    Id f = c.ran[x];
    auto fx = c.comp.product(f, x);
    if (!fx || *fx != x) rep.add("C3", {f, x}, "ran(x) x != x");
  }
  return rep;
}

UnaryStructure as_unary_structure(const FiniteCategory& c) {
  UnaryStructure u;
  u.table = c.comp;
  u.plus = c.ran;
  u.star = c.dom;
  return u;
}

}  // namespace sgpd
