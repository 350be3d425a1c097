#ifndef SGPD_LBEC_HPP
#define SGPD_LBEC_HPP

#include <optional>
#include <vector>

#include "sgpd/category.hpp"
#include "sgpd/order.hpp"
#include "sgpd/ordered.hpp"
#include "sgpd/report.hpp"

namespace sgpd {

// Category with two compatible orders (the image of the C(S) construction).
struct BiorderedCategory {
  FiniteCategory cat;
  OrderRel leq_l;
  OrderRel leq_r;

  bool operator==(const BiorderedCategory& o) const {
    return cat == o.cat && leq_l == o.leq_l && leq_r == o.leq_r;
  }
  bool operator!=(const BiorderedCategory& o) const { return !(*this == o); }
};

struct MeetResult {
  Report report;
  // Meets of object pairs, full-carrier indexing; absent when the objects lie
  // in different comparability components.
  PartialTable meet;
  // Comparability components of the object order, each sorted ascending.
  std::vector<std::vector<Id>> components;
};

// Greatest lower bounds of objects within comparability components of o
// restricted to the objects.  A component pair without a glb is tagged
// "lms-glb"; on success the meet table is itself verified to be a local
// meet-semilattice.
MeetResult derive_meet(const FiniteCategory& c, const OrderRel& o);

struct LbecTables {
  std::vector<std::vector<int>> restriction;     // [x][e], via leq_r, -1 absent
  std::vector<std::vector<int>> corestriction;   // [e][x], via leq_l, -1 absent
  PartialTable meet;                             // object meets, carrier indexing
};

struct LbecResult {
  Report report;
  std::optional<LbecTables> tables;  // present iff the report passes
};

// Locally biordered Ehresmann category axioms:
//   ec1: (cat, leq_l) ordered with corestrictions
//   ec2: (cat, leq_r) ordered with restrictions
//   ec3: objects form a local meet-semilattice under the object order
//   ec4: leq_l and leq_r agree on objects
//   ec5: leq_l o leq_r = leq_r o leq_l (relation composition)
//   ec6: x <=_l y and dom(x)^e defined imply x|(dom(x)^e) <=_l y|(dom(y)^e)
//   ec7: x <=_r y and e^ran(x) defined imply (e^ran(x))|x <=_r (e^ran(y))|y
// When ec4 fails, ec3 and ec5..ec7 are still evaluated against leq_l's object
// order (fact "conditional-on-ec4"); well-definedness gaps inside ec6/ec7
// scans are tagged "ec6-wd"/"ec7-wd".
LbecResult check_lbec(const BiorderedCategory& bc);

// x ox y = (x|e) o (e|y) with e = dom(x) ^ ran(y); absent iff the meet is.
// pre: tables were produced by a passing check_lbec on bc.
std::optional<Id> pseudo_product(const BiorderedCategory& bc, const LbecTables& tables, Id x,
                                 Id y);
PartialTable pseudo_product_table(const BiorderedCategory& bc, const LbecTables& tables);

// Derived laws of the pseudo-product (all theorems on a passing lbec):
//   pp-def:      x ox y, x ox ran(y), dom(x) ox y defined together
//   pp-assoc:    the pseudo-product table is associative (tags s1..s3)
//   pp-restr-nest: f <= e <= dom(x) implies (x|e)|f = x|f and x|f <=_r x|e <=_r x
//   pp-restr-b / pp-corestr-b: x|e = x ox e for e <= dom(x); e|x = e ox x dually
//   pp-meet:     e ox f = e ^ f = f ox e on objects
//   pp2a:        ran(x ox y) = ran(x ox ran(y)), dom(x ox y) = dom(dom(x) ox y)
Report check_pseudo_product_laws(const BiorderedCategory& bc, const LbecTables& tables);

enum class LicGoal { Category, Groupoid };

struct LicResult {
  Report report;
  std::optional<LbecTables> tables;   // present iff the lic axioms pass
  std::optional<std::vector<Id>> inverse;  // Groupoid goal, present iff all unique
};

// Locally inductive category: (c, o) ordered with restrictions and
// corestrictions (prefix "ic1") and objects a local meet-semilattice
// (prefix "ic2").  The verdict is cross-checked against check_lbec on
// (c, o, o); drift throws std::logic_error.  With LicGoal::Groupoid also
// demands a unique two-sided inverse per arrow (tags "groupoid-exists",
// "groupoid-unique") and monotone inversion (tag "ig1"); on a passing lic
// groupoid ig1 holding is itself a theorem, so a violation there throws.
LicResult check_locally_inductive(const FiniteCategory& c, const OrderRel& o, LicGoal goal);

// On a passing lic: x|e = ran(x|e)|x and e|x = x|dom(e|x)
// (tags "rc-swap-a", "rc-swap-b").  Throws PreconditionError if the lic
// axioms fail.
Report check_restriction_corestriction_swap(const FiniteCategory& c, const OrderRel& o);

}  // namespace sgpd

#endif
