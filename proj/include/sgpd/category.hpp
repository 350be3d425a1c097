#ifndef SGPD_CATEGORY_HPP
#define SGPD_CATEGORY_HPP

#include <vector>

#include "sgpd/partial_table.hpp"
#include "sgpd/report.hpp"
#include "sgpd/unary.hpp"

namespace sgpd {

// Finite category with objects identified with their identity arrows.
// Composition follows diagram order: comp(x, y) is "x after y" and is
// intended to be defined exactly when dom(x) = ran(y).
struct FiniteCategory {
  PartialTable comp;
  std::vector<Id> objects;  // sorted ascending
  std::vector<Id> dom;      // total, values expected among objects
  std::vector<Id> ran;

  int size() const { return comp.size(); }
  bool is_object(Id e) const;
  bool operator==(const FiniteCategory& o) const {
    return comp == o.comp && objects == o.objects && dom == o.dom && ran == o.ran;
  }
  bool operator!=(const FiniteCategory& o) const { return !(*this == o); }
};

// Throws InputError on structural problems (sizes, dom/ran values outside
// the object set, unsorted/duplicated object list).
void validate_category(const FiniteCategory& c);

// Category axioms:
//   C-def: comp(x,y) defined iff dom(x) = ran(y)
//   C1:    dom(xy) = dom(y), ran(xy) = ran(x)
//   C2:    (xy)z = x(yz)
//   C3:    dom(e) = ran(e) = e for objects; x e = x when dom(x) = e;
//          e y = y when ran(y) = e
Report check_category(const FiniteCategory& c);

// A category is an Ehresmann semigroupoid with s+ = ran(s), s* = dom(s).
UnaryStructure as_unary_structure(const FiniteCategory& c);

}  // namespace sgpd

#endif
