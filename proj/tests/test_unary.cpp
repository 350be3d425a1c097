#include <doctest.h>

#include <optional>
#include <vector>

#include "sgpd/examples.hpp"
#include "sgpd/unary.hpp"

using namespace sgpd;

namespace {

// Naive axiom transliterations, written against the definitions and kept
// independent of the library's shared mirror machinery.
bool naive_assoc(const PartialTable& t) {
  for (Id a = 0; a < t.size(); ++a) {
    for (Id b = 0; b < t.size(); ++b) {
      for (Id c = 0; c < t.size(); ++c) {
        auto ab = t.product(a, b);
        auto bc = t.product(b, c);
        std::optional<Id> l = ab ? t.product(*ab, c) : std::nullopt;
        std::optional<Id> r = bc ? t.product(a, *bc) : std::nullopt;
        bool h = (ab && bc) || (ab && l) || (bc && r);
        if (h && !(ab && bc && l && r && *l == *r)) return false;
      }
    }
  }
  return true;
}

bool naive_left(const UnaryStructure& u, bool restriction) {
  const PartialTable& t = u.table;
  const std::vector<Id>& p = *u.plus;
  for (Id s = 0; s < t.size(); ++s) {
    if (t.product(p[s], s) != s) return false;  // s+ s = s
    for (Id w = 0; w < t.size(); ++w) {
      auto a = t.product(p[s], p[w]);
      auto b = t.product(p[w], p[s]);
      if (a.has_value() != b.has_value()) return false;  // le2 definedness
      if (a && b && *a != *b) return false;              // le2 equality
      if (a) {
        auto c = t.product(p[s], w);
        if (!c) return false;                    // le3 definedness
        if (p[*c] != *a) return false;           // s+ w+ = (s+ w)+
      }
      auto sw = t.product(s, w);
      if (sw) {
        auto d = t.product(s, p[w]);
        if (!d) return false;  // le4/lr4 definedness
        if (restriction) {
          if (t.product(p[*sw], s) != d) return false;  // s w+ = (sw)+ s
        } else {
          if (p[*d] != p[*sw]) return false;  // (s w+)+ = (sw)+
        }
      }
    }
  }
  return true;
}

bool naive_right(const UnaryStructure& u, bool restriction) {
  const PartialTable& t = u.table;
  const std::vector<Id>& q = *u.star;
  for (Id s = 0; s < t.size(); ++s) {
    if (t.product(s, q[s]) != s) return false;
    for (Id w = 0; w < t.size(); ++w) {
      auto a = t.product(q[s], q[w]);
      auto b = t.product(q[w], q[s]);
      if (a.has_value() != b.has_value()) return false;
      if (a && b && *a != *b) return false;
      if (t.product(q[w], q[s])) {
        auto c = t.product(w, q[s]);
        if (!c) return false;
        if (q[*c] != *b) return false;  // w* s* = (w s*)*
      }
      auto ws = t.product(w, s);
      if (ws) {
        auto d = t.product(q[w], s);
        if (!d) return false;
        if (restriction) {
          if (t.product(s, q[*ws]) != d) return false;  // w* s = s (ws)*
        } else {
          if (q[*d] != q[*ws]) return false;  // (w* s)* = (ws)*
        }
      }
    }
  }
  return true;
}

bool naive_two_sided_extra(const UnaryStructure& u) {
  const std::vector<Id>& p = *u.plus;
  const std::vector<Id>& q = *u.star;
  for (Id s = 0; s < u.size(); ++s) {
    if (q[p[s]] != p[s]) return false;  // (s+)* = s+
    if (p[q[s]] != q[s]) return false;  // (s*)+ = s*
  }
  return true;
}

bool naive_suite(const UnaryStructure& u, AxiomKind kind) {
  if (!naive_assoc(u.table)) return false;
  switch (kind) {
    case AxiomKind::LeftEhresmann:
      return naive_left(u, false);
    case AxiomKind::RightEhresmann:
      return naive_right(u, false);
    case AxiomKind::TwoSidedEhresmann:
      return naive_left(u, false) && naive_right(u, false) && naive_two_sided_extra(u);
    case AxiomKind::LeftRestriction:
      return naive_left(u, true);
    case AxiomKind::RightRestriction:
      return naive_right(u, true);
    case AxiomKind::TwoSidedRestriction:
      return naive_left(u, true) && naive_right(u, true) && naive_two_sided_extra(u);
  }
  return false;
}

}  // namespace

TEST_CASE("unary suites agree with naive transliterations on every 2-element candidate") {
  const AxiomKind kinds[] = {AxiomKind::LeftEhresmann,     AxiomKind::RightEhresmann,
                             AxiomKind::TwoSidedEhresmann, AxiomKind::LeftRestriction,
                             AxiomKind::RightRestriction,  AxiomKind::TwoSidedRestriction};
  std::vector<int> digits(4);
  for (digits[0] = -1; digits[0] < 2; ++digits[0]) {
    for (digits[1] = -1; digits[1] < 2; ++digits[1]) {
      for (digits[2] = -1; digits[2] < 2; ++digits[2]) {
        for (digits[3] = -1; digits[3] < 2; ++digits[3]) {
          UnaryStructure u;
          u.table = PartialTable(2);
          for (int c = 0; c < 4; ++c) {
            if (digits[c] >= 0) u.table.set(c / 2, c % 2, digits[c]);
          }
          for (Id p0 = 0; p0 < 2; ++p0) {
            for (Id p1 = 0; p1 < 2; ++p1) {
              for (Id q0 = 0; q0 < 2; ++q0) {
                for (Id q1 = 0; q1 < 2; ++q1) {
                  u.plus = std::vector<Id>{p0, p1};
                  u.star = std::vector<Id>{q0, q1};
                  for (AxiomKind kind : kinds) {
                    CHECK(verify_structure(u, kind).pass() == naive_suite(u, kind));
                  }
                }
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("the chain passes all six axiom families") {
  UnaryStructure u = chain_semilattice(3);
  for (AxiomKind kind : {AxiomKind::LeftEhresmann, AxiomKind::RightEhresmann,
                         AxiomKind::TwoSidedEhresmann, AxiomKind::LeftRestriction,
                         AxiomKind::RightRestriction, AxiomKind::TwoSidedRestriction}) {
    CHECK(verify_structure(u, kind).pass());
  }
}

TEST_CASE("the two-element group is a two-sided restriction semigroup") {
  CHECK(verify_structure(cyclic_group_z2(), AxiomKind::TwoSidedRestriction).pass());
}

TEST_CASE("the relation semigroup is Ehresmann but not restriction") {
  UnaryStructure u = relation_semigroup(2);
  CHECK(verify_structure(u, AxiomKind::TwoSidedEhresmann).pass());

  Report rep = verify_structure(u, AxiomKind::TwoSidedRestriction);
  CHECK(!rep.pass());
  CHECK(rep.has_violation("lr4"));
  // s = {(0,0),(0,1)}, w = {(0,0)}: s w+ = s but (sw)+ s = {(0,0),(0,1)} restricted wrong
  bool found = false;
  for (const Violation& v : rep.violations()) {
    if (v.axiom == "lr4" && v.witness == std::vector<Id>{3, 1}) found = true;
  }
  CHECK(found);
}

TEST_CASE("missing unary maps are input errors") {
  UnaryStructure u;
  u.table = PartialTable(1);
  u.table.set(0, 0, 0);
  CHECK_THROWS_AS(check_unary_axioms(u, AxiomKind::LeftEhresmann), InputError);
  CHECK_THROWS_AS(check_unary_axioms(u, AxiomKind::TwoSidedEhresmann), InputError);
  u.plus = std::vector<Id>{0};
  CHECK(check_unary_axioms(u, AxiomKind::LeftEhresmann).pass());
  CHECK_THROWS_AS(check_unary_axioms(u, AxiomKind::RightEhresmann), InputError);

  UnaryStructure bad;
  bad.table = PartialTable(2);
  bad.plus = std::vector<Id>{0};
  CHECK_THROWS_AS(validate_unary(bad), InputError);
  bad.plus = std::vector<Id>{0, 2};
  CHECK_THROWS_AS(validate_unary(bad), InputError);
}

TEST_CASE("projection images") {
  UnaryStructure u = relation_semigroup(2);
  CHECK(plus_image(u) == std::vector<Id>{0, 1, 8, 9});
  CHECK(star_image(u) == std::vector<Id>{0, 1, 8, 9});
  CHECK(projection_union(u) == std::vector<Id>{0, 1, 8, 9});
}
