// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sgpd/correspondence.hpp"
#include "sgpd/enumeration.hpp"
#include "sgpd/examples.hpp"
#include "sgpd/inverse.hpp"
#include "sgpd/lbec.hpp"
#include "sgpd/morphisms.hpp"
#include "sgpd/unary.hpp"

using namespace sgpd;

namespace {

std::vector<UnaryStructure> unary_pool(StructureClass cls, int lo, int hi) {
  std::vector<UnaryStructure> out;
  for (int n = lo; n <= hi; ++n)
    for (const EnumeratedStructure& e : enumerate_structures(cls, n, false))
      out.push_back(std::get<UnaryStructure>(e));
  return out;
}

template <typename Fn>
void for_each_map(int src_size, int dst_size, long long cap, Fn&& fn) {
  std::vector<Id> send(src_size, 0);
  long long count = 1;
  for (int i = 0; i < src_size; ++i) count *= dst_size;
  if (count > cap) count = cap;
  for (long long code = 0; code < count; ++code) {
    long long c = code;
    for (int i = 0; i < src_size; ++i) {
      send[i] = static_cast<Id>(c % dst_size);
      c /= dst_size;
    }
    fn(CarrierMap{src_size, dst_size, send});
  }
}

// Passing semigroupoid-side maps from the exhaustive small sweep, reused by
// the composition criterion.  Keyed by (src index, dst index) in the pool.
struct SweepRecord {
  std::vector<PreparedStructure> pool;
  std::map<std::pair<int, int>, std::vector<CarrierMap>> pass_m, pass_vee, pass_wedge;
};

std::string esn_roundtrip() {
  int checked = 0;
  for (const UnaryStructure& u : unary_pool(StructureClass::Ehresmann, 0, 3)) {
    if (!roundtrip_verify(u).pass()) return "semigroupoid-side roundtrip drift";
    if (!roundtrip_verify(build_category(u)).pass()) return "category-side roundtrip drift";
    ++checked;
  }
  return checked == 112 ? "" : "expected 112 structures";
}

std::string construction_soundness() {
  for (const UnaryStructure& u : unary_pool(StructureClass::Ehresmann, 0, 3)) {
    BiorderedCategory bc = build_category(u);
    if (!check_lbec(bc).report.pass()) return "C(S) fails the biordered axioms";
    if (!verify_structure(build_semigroupoid(bc), AxiomKind::TwoSidedEhresmann).pass())
      return "S(C(S)) fails the Ehresmann suite";
  }
  for (int n = 0; n <= 3; ++n) {
    for (const EnumeratedStructure& e : enumerate_structures(StructureClass::Lbec, n, false)) {
      UnaryStructure u = build_semigroupoid(std::get<BiorderedCategory>(e));
      if (!verify_structure(u, AxiomKind::TwoSidedEhresmann).pass())
        return "S(C) fails the Ehresmann suite";
    }
  }
  return "";
}

std::string restriction_collapse() {
  for (const UnaryStructure& u : unary_pool(StructureClass::Restriction, 0, 3)) {
    if (derive_order(u, Side::Left) != derive_order(u, Side::Right))
      return "natural orders differ on a restriction structure";
    BiorderedCategory bc = build_category(u);
    if (bc.leq_l != bc.leq_r) return "C(S) carries two distinct orders";
    if (!check_locally_inductive(bc.cat, bc.leq_l, LicGoal::Category).report.pass())
      return "C(S) fails the locally inductive axioms";
  }
  return "";
}

std::string inverse_correspondence() {
  for (const UnaryStructure& u : unary_pool(StructureClass::Inverse, 0, 3)) {
    BiorderedCategory bc = build_category(u);
    LicResult lic = check_locally_inductive(bc.cat, bc.leq_l, LicGoal::Groupoid);
    if (!lic.report.pass()) return "C(S) fails the groupoid axioms";
    if (!lic.inverse) return "groupoid inverses missing";
    InverseResult inv = check_inverse(u.table);
    if (!inv.inverse) return "pseudo-inverses missing";
    if (*lic.inverse != *inv.inverse) return "groupoid inverse differs from pseudo-inverse";
  }
  return "";
}

std::string class_lattice() {
  for (const UnaryStructure& u : unary_pool(StructureClass::Ehresmann, 0, 3)) {
    ClassifyResult res = classify(u);
    if (!res.report.pass()) return "route disagreement in classify";
    if (res.flags.is_semigroup != res.flags.projections_meet_semilattice)
      return "semigroup flag disagrees with projection meet-semilattice";
    if (res.flags.admits_category_structure != res.flags.projections_locally_complete)
      return "category flag disagrees with local completeness";
  }
  return "";
}

std::string morphism_correspondence(SweepRecord& rec) {
  rec.pool.clear();
  for (const UnaryStructure& u : unary_pool(StructureClass::Restriction, 0, 2))
    rec.pool.push_back(prepare_structure(u));

  long long maps = 0;
  std::string fail;
  for (int si = 0; si < (int)rec.pool.size() && fail.empty(); ++si) {
    for (int di = 0; di < (int)rec.pool.size() && fail.empty(); ++di) {
      const PreparedStructure& s = rec.pool[si];
      const PreparedStructure& d = rec.pool[di];
      for_each_map(s.u.size(), d.u.size(), 1000000, [&](const CarrierMap& m) {
        if (!fail.empty()) return;
        CorrespondenceResult r = verify_correspondence(s, d, m);
        ++maps;
        if (!r.report.pass()) {
          fail = "transfer biconditional broken at sizes <= 2";
          return;
        }
        auto key = std::make_pair(si, di);
        if (r.verdicts.two_one_one) rec.pass_m[key].push_back(m);
        if (r.verdicts.vee.value_or(false)) rec.pass_vee[key].push_back(m);
        if (r.verdicts.wedge.value_or(false)) rec.pass_wedge[key].push_back(m);
      });
    }
  }
  if (!fail.empty()) return fail;

  std::vector<PreparedStructure> three;
  for (const UnaryStructure& u : unary_pool(StructureClass::Restriction, 3, 3))
    three.push_back(prepare_structure(u));
  std::vector<const PreparedStructure*> wide;
  for (const PreparedStructure& p : rec.pool) wide.push_back(&p);
  for (const PreparedStructure& p : three) wide.push_back(&p);

  const long long cap = 100000;
  for (const PreparedStructure* s : wide) {
    for (const PreparedStructure* d : wide) {
      if (s->u.size() < 3 && d->u.size() < 3) continue;
      if (!fail.empty()) break;
      for_each_map(s->u.size(), d->u.size(), cap, [&](const CarrierMap& m) {
        if (!fail.empty()) return;
        ++maps;
        if (!verify_correspondence(*s, *d, m).report.pass())
          fail = "transfer biconditional broken at size 3";
      });
    }
  }
  if (!fail.empty()) return fail;
  std::ostringstream note;
  note << maps << " maps";
  return maps > 0 ? "" : "no maps swept";
}

std::string composition_closure(const SweepRecord& rec) {
  struct KindCase {
    const std::map<std::pair<int, int>, std::vector<CarrierMap>>& pass;
    SgpdMapKind kind;
    const char* name;
  };
  const KindCase cases[] = {
      {rec.pass_m, SgpdMapKind::TwoOneOne, "morphism"},
      {rec.pass_vee, SgpdMapKind::Vee, "vee"},
      {rec.pass_wedge, SgpdMapKind::Wedge, "wedge"},
  };
  long long composed = 0;
  for (const KindCase& kc : cases) {
    for (const auto& [ab, fs] : kc.pass) {
      for (const auto& [bc, gs] : kc.pass) {
        if (ab.second != bc.first) continue;
        const UnaryStructure& a = rec.pool[ab.first].u;
        const UnaryStructure& c = rec.pool[bc.second].u;
        for (const CarrierMap& f : fs) {
          for (const CarrierMap& g : gs) {
            ++composed;
            if (!check_sgpd_map(a, c, compose_maps(f, g), kc.kind).pass()) {
              return std::string("composite fails kind ") + kc.name;
            }
          }
        }
      }
    }
  }
  return composed > 0 ? "" : "no composable pairs found";
}

std::string pseudo_product_laws() {
  int checked = 0;
  auto run_one = [&](const BiorderedCategory& bc) -> bool {
    LbecResult res = check_lbec(bc);
    if (!res.report.pass() || !res.tables) return false;
    ++checked;
    return check_pseudo_product_laws(bc, *res.tables).pass();
  };
  for (int n = 0; n <= 3; ++n)
    for (const EnumeratedStructure& e : enumerate_structures(StructureClass::Lbec, n, false))
      if (!run_one(std::get<BiorderedCategory>(e))) return "law fails on an enumerated category";
  for (const UnaryStructure& u : unary_pool(StructureClass::Ehresmann, 0, 3))
    if (!run_one(build_category(u))) return "law fails on a constructed category";
  return checked == 224 ? "" : "expected 224 categories";
}

std::string relation_semigroup_regression() {
  UnaryStructure bx = relation_semigroup(2);
  if (!verify_structure(bx, AxiomKind::TwoSidedEhresmann).pass()) return "Ehresmann suite fails";
  for (Id i = 0; i < 16; ++i)
    for (Id j = 0; j < 16; ++j)
      if (!bx.table.defined(i, j)) return "product not total";
  Report restr = verify_structure(bx, AxiomKind::TwoSidedRestriction);
  if (restr.pass()) return "restriction suite unexpectedly passes";
  bool witnessed = false;
  for (const Violation& v : restr.violations())
    if (v.axiom == "lr4" && v.witness.size() == 2) witnessed = true;
  if (!witnessed) return "no lr4 witness";
  BiorderedCategory bc = build_category(bx);
  MeetResult mr = derive_meet(bc.cat, bc.leq_l);
  if (!mr.report.pass()) return "object meets fail";
  if (mr.components.size() != 1 || mr.components[0].size() != 4)
    return "objects do not form one meet-semilattice";
  for (Id e : bc.cat.objects)
    for (Id f : bc.cat.objects)
      if (!mr.meet.defined(e, f)) return "object meet missing";
  return "";
}

std::string generator_oracle_agreement() {
  struct Row {
    StructureClass cls;
    std::vector<long long> counts;  // index = n
  };
  const Row rows[] = {
      {StructureClass::Semigroupoid, {1, 2, 16, 277}},
      {StructureClass::Ehresmann, {1, 1, 7, 103}},
      {StructureClass::Restriction, {1, 1, 7, 91}},
      {StructureClass::Inverse, {1, 1, 5, 37}},
      {StructureClass::LocalMeetSemilattice, {1, 1, 3, 16, 137}},
      {StructureClass::Lbec, {1, 1, 7, 103}},
      {StructureClass::Lic, {1, 1, 7, 91}},
      {StructureClass::Lig, {1, 1, 5, 37}},
  };
  for (const Row& row : rows) {
    for (int n = 0; n < (int)row.counts.size(); ++n) {
      long long gen = (long long)enumerate_structures(row.cls, n, false).size();
      long long oracle = oracle_count(row.cls, n);
      if (gen != row.counts[n]) return "generator drifted from the frozen count";
      if (oracle != row.counts[n]) return "oracle drifted from the frozen count";
    }
  }
  return "";
}

}  // namespace

int main() {
  SweepRecord rec;
  struct Criterion {
    const char* name;
    std::function<std::string()> run;
  };
  const Criterion criteria[] = {
      {"esn-roundtrip", esn_roundtrip},
      {"construction-soundness", construction_soundness},
      {"restriction-collapse", restriction_collapse},
      {"inverse-correspondence", inverse_correspondence},
      {"class-lattice-biconditionals", class_lattice},
      {"morphism-correspondence", [&rec] { return morphism_correspondence(rec); }},
      {"composition-closure", [&rec] { return composition_closure(rec); }},
      {"pseudo-product-laws", pseudo_product_laws},
      {"relation-semigroup-regression", relation_semigroup_regression},
      {"generator-oracle-agreement", generator_oracle_agreement},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = c.run();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    if (detail.empty()) {
      std::printf("PASS %s (%.1fs)\n", c.name, elapsed / 1000.0);
    } else {
      std::printf("FAIL %s: %s (%.1fs)\n", c.name, detail.c_str(), elapsed / 1000.0);
      ++failures;
    }
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
