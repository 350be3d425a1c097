#ifndef SGPD_MORPHISMS_HPP
#define SGPD_MORPHISMS_HPP

#include <optional>
#include <vector>

#include "sgpd/correspondence.hpp"
#include "sgpd/lbec.hpp"
#include "sgpd/unary.hpp"

namespace sgpd {

// Total map between carriers; structures travel separately.
struct CarrierMap {
  int src_size = 0;
  int dst_size = 0;
  std::vector<Id> send;

  bool operator==(const CarrierMap& o) const {
    return src_size == o.src_size && dst_size == o.dst_size && send == o.send;
  }
};

void validate_map(const CarrierMap& m);

// Applies f first, then g.
CarrierMap compose_maps(const CarrierMap& f, const CarrierMap& g);

enum class SgpdMapKind {
  TwoOneOne,  // m1: phi(st) = phi(s)phi(t) (definedness required); m2: preserves + and *
  Vee,        // vm1: phi(st) <= phi(s)phi(t); vm2 on projections per variant
  Wedge,      // wm1: phi(s)phi(t) = phi(s)+ phi(st) = phi(st) phi(t)*; wm2: <= on projections
};

// vm2 has two equivalent formulations for the projection condition.
enum class VeeVariant { ProjectionEquality, ProjectionInequality };

// Kind class requirements (InputError on mismatch): TwoOneOne needs two-sided
// Ehresmann structures; Vee and Wedge need two-sided restriction structures.
Report check_sgpd_map(const UnaryStructure& src, const UnaryStructure& dst, const CarrierMap& m,
                      SgpdMapKind kind, VeeVariant variant = VeeVariant::ProjectionEquality);

enum class CatMapKind {
  Inductive,   // if1 dom/ran, if2 composition, if3/if4 both orders, if5 object meets
  Ordered,     // of1 dom/ran, of2 composition, of3 the single order
  Prefunctor,  // ip1..ip5 on the pseudo-product, plus well-definedness tags ip-wd-*
};

// Inductive expects both sides to pass check_lbec; Ordered and Prefunctor
// additionally expect a single order (leq_l = leq_r).  InputError otherwise.
Report check_cat_functor(const BiorderedCategory& src, const BiorderedCategory& dst,
                         const CarrierMap& m, CatMapKind kind);

// A structure with every derived object the morphism checkers consume,
// computed once (the sweeps reuse it across many maps).
struct PreparedStructure {
  UnaryStructure u;
  bool restriction = false;
  BiorderedCategory bc;  // C(u)
  LbecTables tables;
  PartialTable pp;
  OrderRel natural_order;  // left natural order (equals right when restriction)
};

// InputError unless u passes the two-sided Ehresmann suite.
PreparedStructure prepare_structure(const UnaryStructure& u);

struct CorrespondenceVerdicts {
  bool two_one_one = false;
  bool inductive = false;
  std::optional<bool> vee;         // restriction pairs only
  std::optional<bool> ordered;
  std::optional<bool> wedge;
  std::optional<bool> prefunctor;
};

struct CorrespondenceResult {
  Report report;  // violations only for broken biconditionals (esn-m/esn-v/esn-w)
  CorrespondenceVerdicts verdicts;
};

// Decides all six morphism kinds of m between S and C(S)-side structures and
// verifies the three transfer biconditionals:
//   two-one-one <-> inductive functor        (tag "esn-m")
//   vee premorphism <-> ordered functor      (tag "esn-v", restriction pairs)
//   wedge premorphism <-> inductive prefunctor (tag "esn-w", restriction pairs)
CorrespondenceResult verify_correspondence(const PreparedStructure& src,
                                           const PreparedStructure& dst, const CarrierMap& m);
CorrespondenceResult verify_correspondence(const UnaryStructure& src, const UnaryStructure& dst,
                                           const CarrierMap& m);

}  // namespace sgpd

#endif
