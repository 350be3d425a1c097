#ifndef SGPD_INVERSE_HPP
#define SGPD_INVERSE_HPP

#include <optional>
#include <vector>

#include "sgpd/partial_table.hpp"
#include "sgpd/report.hpp"
#include "sgpd/unary.hpp"

namespace sgpd {

struct InverseResult {
  Report report;
  bool regular = false;
  bool idempotents_commute = false;
  // Present iff every element has exactly one pseudo-inverse.
  std::optional<std::vector<Id>> inverse;
  // The canonical unary structure s+ = s s^-1, s* = s^-1 s (present iff inverse).
  std::optional<UnaryStructure> canonical;
};

// Pseudo-inverse of s: an element t with st, ts defined, sts = s and tst = t.
// Inverse semigroupoid: every element has exactly one pseudo-inverse.
// Tags: "inv-exists" (s has none), "inv-unique" (s has several).
// Also records regularity and commutativity of idempotents and cross-checks
// that inverse <=> regular + idempotents-commute (std::logic_error on drift).
// pre: t passes check_associativity.
InverseResult check_inverse(const PartialTable& t);

}  // namespace sgpd

#endif
