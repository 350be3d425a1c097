#ifndef SGPD_CORRESPONDENCE_HPP
#define SGPD_CORRESPONDENCE_HPP

#include <optional>

#include "sgpd/category.hpp"
#include "sgpd/lbec.hpp"
#include "sgpd/unary.hpp"

namespace sgpd {

// C(S): carrier kept as-is, composition = product restricted to pairs with
// s* = t+, objects = projections, dom = star, ran = plus, orders = the
// natural orders.  Throws PreconditionError unless the two-sided Ehresmann
// suite passes.
BiorderedCategory build_category(const UnaryStructure& u);

// S(C): carrier kept as-is, product = pseudo-product, s+ = ran, s* = dom.
// Throws PreconditionError unless check_lbec passes.
UnaryStructure build_semigroupoid(const BiorderedCategory& bc);

// S(C(S)) = S and C(S(C)) = C, entrywise on the same ids
// (tags "roundtrip/mul", "roundtrip/plus", ... / "roundtrip/comp", ...).
Report roundtrip_verify(const UnaryStructure& u);
Report roundtrip_verify(const BiorderedCategory& bc);

struct ClassFlags {
  bool is_semigroupoid = false;
  bool is_ehresmann = false;
  bool is_restriction = false;
  bool is_inverse = false;
  bool is_semigroup = false;
  bool admits_category_structure = false;
  bool projections_meet_semilattice = false;
  bool projections_locally_complete = false;
};

struct ClassifyResult {
  ClassFlags flags;
  Report report;
};

// Classifies a two-sided Ehresmann structure.  Every flag with a category
// characterization is decided twice, directly on S and through C(S):
//   restriction <-> orders coincide and C(S) is a locally inductive category
//   inverse     <-> C(S) is a locally inductive groupoid (the direct route
//                   also demands the given +/* equal s s^-1 / s^-1 s)
//   semigroup   <-> projections form a total meet-semilattice
//   category    <-> projections admit a category structure
// Route disagreement is reported under "classify/..." tags (theorem
// violations, so an empty report doubles as a correspondence audit).
ClassifyResult classify(const UnaryStructure& u);

// Searches for a category structure on the projection set (candidate object
// subsets in increasing bitmask order, identity assignments lexicographic)
// and lifts the first hit to all of S via dom(s) = d(s*), ran(s) = d(s+).
// Returns std::nullopt when no structure exists.
std::optional<FiniteCategory> extend_category_structure(const UnaryStructure& u);

// Category structure search directly on S: dom/ran candidates are identity
// elements acting on the row/column definedness classes.  Used by classify
// as the direct route; a found structure always passes check_category.
std::optional<FiniteCategory> find_category_structure(const PartialTable& t);

}  // namespace sgpd

#endif
