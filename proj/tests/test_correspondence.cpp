#include <doctest.h>

#include <vector>

#include "sgpd/correspondence.hpp"
#include "sgpd/enumeration.hpp"
#include "sgpd/examples.hpp"

using namespace sgpd;

namespace {

UnaryStructure two_antichain() {
  UnaryStructure u;
  u.table = PartialTable(2);
  u.table.set(0, 0, 0);
  u.table.set(1, 1, 1);
  u.plus = std::vector<Id>{0, 1};
  u.star = std::vector<Id>{0, 1};
  return u;
}

UnaryStructure left_zero_pair() {
  UnaryStructure u;
  u.table = PartialTable(2);
  u.table.set(0, 0, 0);
  u.table.set(0, 1, 0);
  u.table.set(1, 0, 1);
  u.table.set(1, 1, 1);
  u.plus = std::vector<Id>{0, 1};
  u.star = std::vector<Id>{0, 1};
  return u;
}

}  // namespace

TEST_CASE("category construction keeps the carrier and swaps the unary maps") {
  UnaryStructure bx = relation_semigroup(2);
  BiorderedCategory bc = build_category(bx);
  CHECK(bc.cat.objects == std::vector<Id>{0, 1, 8, 9});
  CHECK(bc.cat.dom == *bx.star);
  CHECK(bc.cat.ran == *bx.plus);
  CHECK(bc.cat.comp.size() == 16);
}

TEST_CASE("category construction rejects non-Ehresmann input") {
  CHECK_THROWS_AS(build_category(left_zero_pair()), PreconditionError);
}

TEST_CASE("roundtrips recover every enumerated structure") {
  for (int n = 0; n <= 2; ++n) {
    for (const EnumeratedStructure& e : enumerate_structures(StructureClass::Ehresmann, n, false)) {
      CHECK(roundtrip_verify(std::get<UnaryStructure>(e)).pass());
    }
    for (const EnumeratedStructure& e : enumerate_structures(StructureClass::Lbec, n, false)) {
      CHECK(roundtrip_verify(std::get<BiorderedCategory>(e)).pass());
    }
  }
}

TEST_CASE("classify separates the group, the chain, and the antichain") {
  ClassifyResult z2 = classify(cyclic_group_z2());
  CHECK(z2.report.pass());
  CHECK(z2.flags.is_restriction);
  CHECK(z2.flags.is_inverse);
  CHECK(z2.flags.is_semigroup);
  CHECK(z2.flags.admits_category_structure);

  // the chain's canonical pseudo-inverses are the elements themselves
  ClassifyResult ch = classify(chain_semilattice(2));
  CHECK(ch.report.pass());
  CHECK(ch.flags.is_inverse);
  CHECK(ch.flags.is_semigroup);
  CHECK(ch.flags.projections_meet_semilattice);

  ClassifyResult anti = classify(two_antichain());
  CHECK(anti.report.pass());
  CHECK(anti.flags.is_restriction);
  CHECK(anti.flags.is_inverse);
  CHECK(!anti.flags.is_semigroup);
  CHECK(!anti.flags.projections_meet_semilattice);
  CHECK(anti.flags.projections_locally_complete);
  CHECK(anti.flags.admits_category_structure);
}

TEST_CASE("classify rejects non-Ehresmann input") {
  CHECK_THROWS_AS(classify(left_zero_pair()), PreconditionError);
}

TEST_CASE("classify on the relation semigroup matches hand-derived flags") {
  ClassifyResult bx = classify(relation_semigroup(2));
  CHECK(bx.report.pass());
  CHECK(bx.flags.is_ehresmann);
  CHECK(!bx.flags.is_restriction);
  CHECK(!bx.flags.is_inverse);
  CHECK(bx.flags.is_semigroup);
  CHECK(bx.flags.admits_category_structure);
  CHECK(bx.flags.projections_meet_semilattice);
}

TEST_CASE("category structure search picks the smallest working object set") {
  auto chain_cat = extend_category_structure(chain_semilattice(2));
  REQUIRE(chain_cat.has_value());
  CHECK(chain_cat->objects == std::vector<Id>{1});

  // only the full diagonal relation is a two-sided identity
  auto bx_cat = extend_category_structure(relation_semigroup(2));
  REQUIRE(bx_cat.has_value());
  CHECK(bx_cat->objects == std::vector<Id>{9});
}

TEST_CASE("direct table search finds identities or gives up") {
  CHECK(!find_category_structure(left_zero_pair().table).has_value());

  auto z2_cat = find_category_structure(cyclic_group_z2().table);
  REQUIRE(z2_cat.has_value());
  CHECK(z2_cat->objects == std::vector<Id>{0});
  CHECK(z2_cat->dom == std::vector<Id>{0, 0});
  CHECK(check_category(*z2_cat).pass());
}
