#include <doctest.h>

#include "sgpd/examples.hpp"
#include "sgpd/unary.hpp"

using namespace sgpd;

TEST_CASE("relation semigroup on one point") {
  UnaryStructure u = relation_semigroup(1);
  REQUIRE(u.size() == 2);
  CHECK(u.table.total());
  CHECK(u.table.at(0, 0) == 0);
  CHECK(u.table.at(0, 1) == 0);
  CHECK(u.table.at(1, 0) == 0);
  CHECK(u.table.at(1, 1) == 1);
  CHECK((*u.plus)[0] == 0);
  CHECK((*u.plus)[1] == 1);
  CHECK(u.table.label(0) == "{}");
  CHECK(u.table.label(1) == "{(0,0)}");
}

TEST_CASE("relation semigroup on two points") {
  UnaryStructure u = relation_semigroup(2);
  REQUIRE(u.size() == 16);
  CHECK(u.table.total());

  // R = {(0,1)} is id 2: nilpotent, domain {0}, range {1}
  CHECK(u.table.at(2, 2) == 0);
  CHECK((*u.plus)[2] == 1);
  CHECK((*u.star)[2] == 8);
  CHECK(u.table.label(2) == "{(0,1)}");
  CHECK(u.table.label(9) == "{(0,0),(1,1)}");

  // composition applies the left factor first: {(0,1)} then {(1,0)} is {(0,0)}
  CHECK(u.table.at(2, 4) == 1);
  CHECK(u.table.at(4, 2) == 8);

  // the diagonal is the identity
  for (Id m = 0; m < 16; ++m) {
    CHECK(u.table.at(9, m) == m);
    CHECK(u.table.at(m, 9) == m);
  }
}

TEST_CASE("relation semigroup size guard") {
  CHECK_THROWS_AS(relation_semigroup(0), SizeError);
  CHECK_THROWS_AS(relation_semigroup(3), SizeError);
  CHECK_THROWS_AS(relation_semigroup(-1), SizeError);
}

TEST_CASE("chain semilattice is the min table") {
  UnaryStructure u = chain_semilattice(3);
  REQUIRE(u.size() == 3);
  for (Id a = 0; a < 3; ++a) {
    for (Id b = 0; b < 3; ++b) CHECK(u.table.at(a, b) == std::min(a, b));
    CHECK((*u.plus)[a] == a);
    CHECK((*u.star)[a] == a);
  }
}

TEST_CASE("two-element group") {
  UnaryStructure u = cyclic_group_z2();
  REQUIRE(u.size() == 2);
  CHECK(u.table.at(1, 1) == 0);
  CHECK(u.table.at(0, 1) == 1);
  CHECK(*u.plus == std::vector<Id>{0, 0});
  CHECK(*u.star == std::vector<Id>{0, 0});
  CHECK(u.table.label(1) == "g");
}
