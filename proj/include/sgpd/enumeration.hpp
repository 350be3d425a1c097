#ifndef SGPD_ENUMERATION_HPP
#define SGPD_ENUMERATION_HPP

#include <string>
#include <variant>
#include <vector>

#include "sgpd/lbec.hpp"
#include "sgpd/unary.hpp"

namespace sgpd {

enum class StructureClass {
  Semigroupoid,
  Ehresmann,      // two-sided, (table, plus, star) triples
  Restriction,    // two-sided
  Inverse,        // bare tables, emitted with the canonical +/*
  LocalMeetSemilattice,
  Lbec,
  Lic,            // emitted with leq_l = leq_r
  Lig,
};

bool is_category_class(StructureClass cls);

using EnumeratedStructure = std::variant<UnaryStructure, BiorderedCategory>;

// All structures on carrier {0..n-1} in a deterministic order (backtracking
// over cells in row-major order, "undefined" branched before defined values).
// Every emission is re-verified with its class checker.  With dedup, one
// representative (the first emitted) per isomorphism class.
// Size guards: n <= 4 for LocalMeetSemilattice, n <= 3 otherwise.
std::vector<EnumeratedStructure> enumerate_structures(StructureClass cls, int n, bool dedup);

// Independent count over the complete raw candidate space filtered by the
// checkers; same guards as enumerate_structures.
long long oracle_count(StructureClass cls, int n);

// Lexicographically smallest serialization over all carrier relabelings;
// equal forms mean isomorphic structures.  Guarded to n <= 8.
std::string canonical_form(const UnaryStructure& u);
std::string canonical_form(const BiorderedCategory& bc);
std::string canonical_form(const EnumeratedStructure& e);

}  // namespace sgpd

#endif
