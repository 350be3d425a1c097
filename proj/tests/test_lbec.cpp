#include <doctest.h>

#include <algorithm>
#include <vector>

#include "sgpd/correspondence.hpp"
#include "sgpd/examples.hpp"
#include "sgpd/lbec.hpp"

using namespace sgpd;

namespace {

bool has_fact(const Report& rep, const std::string& name) {
  for (const Fact& f : rep.facts())
    if (f.name == name) return true;
  return false;
}

FiniteCategory two_discrete_objects() {
  FiniteCategory c;
  c.objects = {0, 1};
  c.dom = {0, 1};
  c.ran = {0, 1};
  c.comp = PartialTable(2);
  c.comp.set(0, 0, 0);
  c.comp.set(1, 1, 1);
  return c;
}

// commutative idempotent monoid: identity 0, meet of 1 and 2 is 1
FiniteCategory semilattice_monoid() {
  FiniteCategory c;
  c.objects = {0};
  c.dom = {0, 0, 0};
  c.ran = {0, 0, 0};
  c.comp = PartialTable(3);
  for (Id x = 0; x < 3; ++x) {
    c.comp.set(0, x, x);
    c.comp.set(x, 0, x);
  }
  c.comp.set(1, 1, 1);
  c.comp.set(1, 2, 1);
  c.comp.set(2, 1, 1);
  c.comp.set(2, 2, 2);
  return c;
}

}  // namespace

TEST_CASE("relation semigroup category passes the biordered axioms") {
  UnaryStructure bx = relation_semigroup(2);
  BiorderedCategory bc = build_category(bx);
  LbecResult res = check_lbec(bc);
  CHECK(res.report.pass());
  REQUIRE(res.tables.has_value());

  CHECK(pseudo_product_table(bc, *res.tables) == bx.table);
  CHECK(check_pseudo_product_laws(bc, *res.tables).pass());
}

TEST_CASE("restriction input yields one order and a locally inductive category") {
  BiorderedCategory bc = build_category(chain_semilattice(3));
  CHECK(bc.leq_l == bc.leq_r);

  LicResult lic = check_locally_inductive(bc.cat, bc.leq_l, LicGoal::Category);
  CHECK(lic.report.pass());
  CHECK(lic.tables.has_value());

  CHECK(check_restriction_corestriction_swap(bc.cat, bc.leq_l).pass());
}

TEST_CASE("group input yields a locally inductive groupoid") {
  BiorderedCategory bc = build_category(cyclic_group_z2());
  LicResult lic = check_locally_inductive(bc.cat, bc.leq_l, LicGoal::Groupoid);
  CHECK(lic.report.pass());
  REQUIRE(lic.inverse.has_value());
  CHECK(*lic.inverse == std::vector<Id>{0, 1});
}

TEST_CASE("non-restriction input fails the single-order axioms") {
  BiorderedCategory bc = build_category(relation_semigroup(2));
  CHECK(bc.leq_l != bc.leq_r);

  LicResult lic = check_locally_inductive(bc.cat, bc.leq_l, LicGoal::Category);
  CHECK(!lic.report.pass());
  CHECK(!lic.tables.has_value());

  CHECK_THROWS_AS(check_restriction_corestriction_swap(bc.cat, bc.leq_l), PreconditionError);
}

TEST_CASE("object meets are derived per comparability component") {
  BiorderedCategory bc = build_category(chain_semilattice(2));
  MeetResult mr = derive_meet(bc.cat, bc.leq_l);
  CHECK(mr.report.pass());
  REQUIRE(mr.components.size() == 1);
  CHECK(mr.components[0] == std::vector<Id>{0, 1});
  CHECK(mr.meet.at(0, 1) == 0);
  CHECK(mr.meet.at(1, 1) == 1);
}

TEST_CASE("incomparable objects land in separate components") {
  FiniteCategory c = two_discrete_objects();
  MeetResult mr = derive_meet(c, OrderRel::discrete(2));
  CHECK(mr.report.pass());
  REQUIRE(mr.components.size() == 2);
  CHECK(mr.components[0] == std::vector<Id>{0});
  CHECK(mr.components[1] == std::vector<Id>{1});
  CHECK(!mr.meet.defined(0, 1));
  CHECK(mr.meet.at(0, 0) == 0);
}

TEST_CASE("ec4 flags object-order disagreement") {
  BiorderedCategory bc;
  bc.cat = two_discrete_objects();
  bc.leq_l = OrderRel::discrete(2);
  bc.leq_l.set(0, 1);
  bc.leq_r = OrderRel::discrete(2);

  LbecResult res = check_lbec(bc);
  CHECK(!res.report.pass());
  CHECK(res.report.has_violation("ec4"));
  CHECK(has_fact(res.report, "conditional-on-ec4"));
  CHECK(!res.tables.has_value());
}

TEST_CASE("ec5 flags non-commuting order composition") {
  BiorderedCategory bc;
  bc.cat = semilattice_monoid();
  bc.leq_l = OrderRel::discrete(3);
  bc.leq_l.set(1, 2);
  bc.leq_r = OrderRel::discrete(3);
  bc.leq_r.set(2, 0);

  // 1 <=_l 2 <=_r 0 composes one way only
  LbecResult res = check_lbec(bc);
  CHECK(res.report.has_violation("ec5"));
}
