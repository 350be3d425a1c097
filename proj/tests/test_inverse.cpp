#include <doctest.h>

#include <vector>

#include "sgpd/examples.hpp"
#include "sgpd/inverse.hpp"

using namespace sgpd;

namespace {

std::vector<Id> naive_pseudo_inverses(const PartialTable& t, Id s) {
  std::vector<Id> out;
  for (Id x = 0; x < t.size(); ++x) {
    auto sx = t.product(s, x);
    auto xs = t.product(x, s);
    if (!sx || !xs) continue;
    if (t.product(*sx, s) == s && t.product(*xs, x) == x) out.push_back(x);
  }
  return out;
}

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

}  // namespace

TEST_CASE("inverse checker agrees with naive pseudo-inverse sets on 2-element tables") {
  int inverse_count = 0;
  std::vector<int> digits(4);
  for (digits[0] = -1; digits[0] < 2; ++digits[0]) {
    for (digits[1] = -1; digits[1] < 2; ++digits[1]) {
      for (digits[2] = -1; digits[2] < 2; ++digits[2]) {
        for (digits[3] = -1; digits[3] < 2; ++digits[3]) {
          PartialTable t(2);
          for (int c = 0; c < 4; ++c) {
            if (digits[c] >= 0) t.set(c / 2, c % 2, digits[c]);
          }
          if (!naive_assoc(t)) continue;
          InverseResult res = check_inverse(t);
          bool naive_ok = true;
          bool naive_regular = true;
          for (Id s = 0; s < 2; ++s) {
            auto invs = naive_pseudo_inverses(t, s);
            if (invs.size() != 1) naive_ok = false;
            if (invs.empty()) naive_regular = false;
            if (res.inverse && invs.size() == 1) CHECK((*res.inverse)[s] == invs[0]);
          }
          CHECK(res.inverse.has_value() == naive_ok);
          CHECK(res.report.pass() == naive_ok);
          CHECK(res.regular == naive_regular);
          if (naive_ok) ++inverse_count;
        }
      }
    }
  }
  CHECK(inverse_count == 5);
}

TEST_CASE("groups and semilattices are inverse structures") {
  InverseResult z2 = check_inverse(cyclic_group_z2().table);
  REQUIRE(z2.inverse.has_value());
  CHECK(*z2.inverse == std::vector<Id>{0, 1});
  CHECK(z2.canonical->plus == std::vector<Id>{0, 0});
  CHECK(z2.canonical->star == std::vector<Id>{0, 0});

  InverseResult chain = check_inverse(chain_semilattice(3).table);
  REQUIRE(chain.inverse.has_value());
  CHECK(*chain.inverse == std::vector<Id>{0, 1, 2});
  CHECK(chain.canonical->plus == std::vector<Id>{0, 1, 2});
}

TEST_CASE("an empty table is not regular") {
  InverseResult res = check_inverse(PartialTable(1));
  CHECK(!res.regular);
  CHECK(!res.inverse.has_value());
  CHECK(res.report.has_violation("inv-exists"));
}

TEST_CASE("several pseudo-inverses are flagged") {
  PartialTable left_zero(2);
  for (Id i = 0; i < 2; ++i) {
    for (Id j = 0; j < 2; ++j) left_zero.set(i, j, i);
  }
  InverseResult res = check_inverse(left_zero);
  CHECK(res.regular);
  CHECK(res.report.has_violation("inv-unique"));
  CHECK(!res.inverse.has_value());
}

TEST_CASE("the relation semigroup is regular but idempotents do not commute") {
  InverseResult res = check_inverse(relation_semigroup(2).table);
  CHECK(res.regular);
  CHECK(!res.idempotents_commute);
  CHECK(!res.inverse.has_value());
}
