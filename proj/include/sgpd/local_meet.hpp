#ifndef SGPD_LOCAL_MEET_HPP
#define SGPD_LOCAL_MEET_HPP

#include <vector>

#include "sgpd/order.hpp"
#include "sgpd/partial_table.hpp"
#include "sgpd/report.hpp"

namespace sgpd {

struct LocalMeetResult {
  Report report;
  // Blocks of the definedness relation (s ~ t iff st defined), each sorted
  // ascending, ordered by smallest member.  Empty when the axioms fail.
  std::vector<std::vector<Id>> blocks;
};

// Local meet-semilattice: associativity, ee = e for every element, and
// commutativity wherever defined (tags "lms-idempotent", "lms-commutative").
// On a passing structure the definedness relation is an equivalence whose
// blocks are total meet-semilattices, the table is determined by the derived
// order, and rebuilding the table from (blocks, order) reproduces it exactly;
// failures of those derived facts signal a checker bug (std::logic_error).
LocalMeetResult check_local_meet_semilattice(const PartialTable& t);

// Order s <= t iff st defined and st = s.
OrderRel derived_meet_order(const PartialTable& t);

}  // namespace sgpd

#endif
