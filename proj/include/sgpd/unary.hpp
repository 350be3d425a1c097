#ifndef SGPD_UNARY_HPP
#define SGPD_UNARY_HPP

#include <optional>
#include <vector>

#include "sgpd/order.hpp"
#include "sgpd/partial_table.hpp"
#include "sgpd/report.hpp"

namespace sgpd {

// Axiom families for a semigroupoid with unary operations s+ / s*.
enum class AxiomKind {
  LeftEhresmann,
  RightEhresmann,
  TwoSidedEhresmann,
  LeftRestriction,
  RightRestriction,
  TwoSidedRestriction,
};

enum class Side { Left, Right };

// Partial binary operation plus optional unary maps s -> s+ and s -> s*.
struct UnaryStructure {
  PartialTable table;
  std::optional<std::vector<Id>> plus;
  std::optional<std::vector<Id>> star;

  int size() const { return table.size(); }
  bool operator==(const UnaryStructure& o) const {
    return table == o.table && plus == o.plus && star == o.star;
  }
  bool operator!=(const UnaryStructure& o) const { return !(*this == o); }
};

// Validates sizes/ranges of the unary maps against the table; throws InputError.
void validate_unary(const UnaryStructure& u);

// Left axioms (tags le1..le4 / lr1..lr4, plus E for two-sided kinds):
//   1: s+ s = s
//   2: s+ t+ = t+ s+ (definedness both ways)
//   3: s+ t+ defined => s+ t defined and s+ t+ = (s+ t)+
//   4 (Ehresmann):   st defined => s t+ defined and (st)+ = (s t+)+
//   4 (restriction): st defined => s t+ = (st)+ s
// Right axioms are the mirror images (tags re1..re4 / rr1..rr4).
// Axiom E: (s+)* = s+ and (s*)+ = s*.
// pre: table passes check_associativity.
Report check_unary_axioms(const UnaryStructure& u, AxiomKind kind);

// check_associativity + check_unary_axioms in one report.
Report verify_structure(const UnaryStructure& u, AxiomKind kind);

// Images of the unary maps, sorted ascending.
std::vector<Id> plus_image(const UnaryStructure& u);
std::vector<Id> star_image(const UnaryStructure& u);
// Union of both images; equals either image when the two-sided axioms hold.
std::vector<Id> projection_union(const UnaryStructure& u);

// Natural partial order: s <=_l t iff s+ t = s; s <=_r t iff t s* = s.
// Verifies the partial-order laws and the equivalence with the existential
// form (some projection e with et = s, resp. te = s); failures of either
// signal a checker bug and throw std::logic_error.
// pre: the matching one-sided Ehresmann axioms pass.
OrderRel derive_order(const UnaryStructure& u, Side side);

// On a two-sided Ehresmann structure the two orders agree on projections
// (tag "lre-order"); if the restriction axioms also pass they agree on all
// of S (tag "restriction-order").
Report check_order_coincidence_on_projections(const UnaryStructure& u);

}  // namespace sgpd

#endif
