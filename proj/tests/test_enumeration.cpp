#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "sgpd/enumeration.hpp"
#include "sgpd/unary.hpp"

using namespace sgpd;

namespace {

const StructureClass kAllClasses[] = {
    StructureClass::Semigroupoid, StructureClass::Ehresmann,
    StructureClass::Restriction,  StructureClass::Inverse,
    StructureClass::LocalMeetSemilattice, StructureClass::Lbec,
    StructureClass::Lic,          StructureClass::Lig,
};

long long labeled_count(StructureClass cls, int n) {
  return static_cast<long long>(enumerate_structures(cls, n, false).size());
}

long long dedup_count(StructureClass cls, int n) {
  return static_cast<long long>(enumerate_structures(cls, n, true).size());
}

UnaryStructure permute_structure(const UnaryStructure& u, const std::vector<Id>& pi) {
  UnaryStructure out;
  out.table = permute(u.table, pi);
  if (u.plus) {
    std::vector<Id> p(u.size());
    for (Id i = 0; i < u.size(); ++i) p[pi[i]] = pi[(*u.plus)[i]];
    out.plus = p;
  }
  if (u.star) {
    std::vector<Id> s(u.size());
    for (Id i = 0; i < u.size(); ++i) s[pi[i]] = pi[(*u.star)[i]];
    out.star = s;
  }
  return out;
}

}  // namespace

TEST_CASE("labeled counts match the frozen table") {
  // rows: class; columns: n = 0..3
  const long long expected[8][4] = {
      {1, 2, 16, 277},  // semigroupoid
      {1, 1, 7, 103},   // ehresmann
      {1, 1, 7, 91},    // restriction
      {1, 1, 5, 37},    // inverse
      {1, 1, 3, 16},    // local meet-semilattice
      {1, 1, 7, 103},   // lbec
      {1, 1, 7, 91},    // lic
      {1, 1, 5, 37},    // lig
  };
  for (int c = 0; c < 8; ++c)
    for (int n = 0; n <= 3; ++n) CHECK(labeled_count(kAllClasses[c], n) == expected[c][n]);
  CHECK(labeled_count(StructureClass::LocalMeetSemilattice, 4) == 137);
}

TEST_CASE("isomorphism-reduced counts match the frozen table") {
  const long long expected[8][4] = {
      {1, 2, 10, 59},  // semigroupoid
      {1, 1, 4, 20},   // ehresmann
      {1, 1, 4, 18},   // restriction
      {1, 1, 3, 8},    // inverse
      {1, 1, 2, 4},    // local meet-semilattice
      {1, 1, 4, 20},   // lbec
      {1, 1, 4, 18},   // lic
      {1, 1, 3, 8},    // lig
  };
  for (int c = 0; c < 8; ++c)
    for (int n = 0; n <= 3; ++n) CHECK(dedup_count(kAllClasses[c], n) == expected[c][n]);
  CHECK(dedup_count(StructureClass::LocalMeetSemilattice, 4) == 10);
}

TEST_CASE("independent counting agrees with the generator on small sizes") {
  for (StructureClass cls : kAllClasses)
    for (int n = 0; n <= 2; ++n) CHECK(oracle_count(cls, n) == labeled_count(cls, n));
}

TEST_CASE("semigroupoid and category counts mirror each other") {
  for (int n = 0; n <= 3; ++n) {
    CHECK(labeled_count(StructureClass::Ehresmann, n) == labeled_count(StructureClass::Lbec, n));
    CHECK(labeled_count(StructureClass::Restriction, n) == labeled_count(StructureClass::Lic, n));
    CHECK(labeled_count(StructureClass::Inverse, n) == labeled_count(StructureClass::Lig, n));
  }
}

TEST_CASE("canonical form is a relabeling invariant") {
  std::vector<Id> pi = {2, 0, 1};
  for (const EnumeratedStructure& e :
       enumerate_structures(StructureClass::Restriction, 3, true)) {
    const UnaryStructure& u = std::get<UnaryStructure>(e);
    CHECK(canonical_form(u) == canonical_form(permute_structure(u, pi)));
  }
}

TEST_CASE("reduced representatives have pairwise distinct canonical forms") {
  for (StructureClass cls : {StructureClass::Semigroupoid, StructureClass::Restriction,
                             StructureClass::Lbec}) {
    std::set<std::string> forms;
    auto reps = enumerate_structures(cls, 3, true);
    for (const EnumeratedStructure& e : reps) forms.insert(canonical_form(e));
    CHECK(forms.size() == reps.size());
  }
}

TEST_CASE("class containments hold on canonical form sets") {
  for (int n = 0; n <= 3; ++n) {
    auto forms = [&](StructureClass cls) {
      std::set<std::string> out;
      for (const EnumeratedStructure& e : enumerate_structures(cls, n, true))
        out.insert(canonical_form(e));
      return out;
    };
    std::set<std::string> inv = forms(StructureClass::Inverse);
    std::set<std::string> restr = forms(StructureClass::Restriction);
    std::set<std::string> ehr = forms(StructureClass::Ehresmann);
    CHECK(std::includes(restr.begin(), restr.end(), inv.begin(), inv.end()));
    CHECK(std::includes(ehr.begin(), ehr.end(), restr.begin(), restr.end()));

    std::set<std::string> lig = forms(StructureClass::Lig);
    std::set<std::string> lic = forms(StructureClass::Lic);
    std::set<std::string> lbec = forms(StructureClass::Lbec);
    CHECK(std::includes(lic.begin(), lic.end(), lig.begin(), lig.end()));
    CHECK(std::includes(lbec.begin(), lbec.end(), lic.begin(), lic.end()));
  }
}

TEST_CASE("enumeration is deterministic") {
  CHECK(enumerate_structures(StructureClass::Ehresmann, 2, false) ==
        enumerate_structures(StructureClass::Ehresmann, 2, false));
  CHECK(enumerate_structures(StructureClass::Lic, 2, true) ==
        enumerate_structures(StructureClass::Lic, 2, true));
}

TEST_CASE("size guards reject out-of-range requests") {
  CHECK_THROWS_AS(enumerate_structures(StructureClass::Semigroupoid, 4, false), SizeError);
  CHECK_THROWS_AS(enumerate_structures(StructureClass::LocalMeetSemilattice, 5, false), SizeError);
  CHECK_THROWS_AS(enumerate_structures(StructureClass::Lbec, -1, false), SizeError);
  CHECK_THROWS_AS(oracle_count(StructureClass::Inverse, 4), SizeError);

  UnaryStructure big;
  big.table = PartialTable(9);
  CHECK_THROWS_AS(canonical_form(big), SizeError);
}

TEST_CASE("class kinds are partitioned between the two carriers") {
  CHECK(!is_category_class(StructureClass::Semigroupoid));
  CHECK(!is_category_class(StructureClass::Ehresmann));
  CHECK(!is_category_class(StructureClass::Restriction));
  CHECK(!is_category_class(StructureClass::Inverse));
  CHECK(!is_category_class(StructureClass::LocalMeetSemilattice));
  CHECK(is_category_class(StructureClass::Lbec));
  CHECK(is_category_class(StructureClass::Lic));
  CHECK(is_category_class(StructureClass::Lig));
}
