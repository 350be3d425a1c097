#ifndef SGPD_ORDERED_HPP
#define SGPD_ORDERED_HPP

#include <optional>
#include <vector>

#include "sgpd/category.hpp"
#include "sgpd/order.hpp"
#include "sgpd/report.hpp"

namespace sgpd {

enum class OrderedMode { Plain, WithRestrictions, WithCorestrictions };

struct OrderedResult {
  Report report;
  // restriction[x][e]: the unique z <= x with dom(z) = e; -1 where absent.
  std::optional<std::vector<std::vector<int>>> restriction;
  // corestriction[e][x]: the unique z <= x with ran(z) = e; -1 where absent.
  std::optional<std::vector<std::vector<int>>> corestriction;
};

// Ordered category laws for (c, o):
//   order laws first (prefix "order"; a failing order short-circuits)
//   O1: x <= y implies dom(x) <= dom(y) and ran(x) <= ran(y)
//   O2: x <= y, x' <= y', both composites defined imply x x' <= y y'
// WithRestrictions additionally demands, for every arrow x and object
// e <= dom(x), a unique z <= x with dom(z) = e (tags "Or-exists",
// "Or-unique") and fills `restriction`; WithCorestrictions is the dual on
// ran (tags "Oc-exists", "Oc-unique").  On a passing structure the order is
// characterized by x <= y iff dom(x) <= dom(y) and y|dom(x) = x (dually via
// ran); the characterization check is tagged "order-char".
// pre: c passes check_category.
OrderedResult check_ordered(const FiniteCategory& c, const OrderRel& o, OrderedMode mode);

}  // namespace sgpd

#endif
