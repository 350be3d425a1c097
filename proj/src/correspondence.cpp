#include "sgpd/correspondence.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "sgpd/inverse.hpp"
#include "sgpd/local_meet.hpp"

namespace sgpd {

BiorderedCategory build_category(const UnaryStructure& u) {
  Report pre = verify_structure(u, AxiomKind::TwoSidedEhresmann);
  if (!pre.pass()) {
    throw PreconditionError("not a two-sided Ehresmann semigroupoid", std::move(pre));
  }

  const int n = u.size();
  const auto& plus = *u.plus;
  const auto& star = *u.star;

  BiorderedCategory bc;
  bc.cat.comp = PartialTable(n);
  bc.cat.comp.set_labels(u.table.labels());
  for (Id s = 0; s < n; ++s) {
    for (Id t = 0; t < n; ++t) {
      if (star[s] != plus[t]) continue;
      auto p = u.table.product(s, t);
      if (!p) throw std::logic_error("product undefined on matched projections");
      bc.cat.comp.set(s, t, *p);
    }
  }
  bc.cat.objects = projection_union(u);
  bc.cat.dom = star;
  bc.cat.ran = plus;
  bc.leq_l = derive_order(u, Side::Left);
  bc.leq_r = derive_order(u, Side::Right);
  return bc;
}

UnaryStructure build_semigroupoid(const BiorderedCategory& bc) {
  LbecResult res = check_lbec(bc);
  if (!res.report.pass()) {
    throw PreconditionError("not a locally biordered Ehresmann category", std::move(res.report));
  }
  UnaryStructure u;
  u.table = pseudo_product_table(bc, *res.tables);
  u.plus = bc.cat.ran;
  u.star = bc.cat.dom;
  return u;
}

Report roundtrip_verify(const UnaryStructure& u) {
  Report rep;
  UnaryStructure back = build_semigroupoid(build_category(u));
  const int n = u.size();
  for (Id i = 0; i < n; ++i) {
    for (Id j = 0; j < n; ++j) {
      if (u.table.product(i, j) != back.table.product(i, j)) {
        rep.add("roundtrip/mul", {i, j});
      }
    }
  }
  for (Id i = 0; i < n; ++i) {
    if ((*u.plus)[i] != (*back.plus)[i]) rep.add("roundtrip/plus", {i});
    if ((*u.star)[i] != (*back.star)[i]) rep.add("roundtrip/star", {i});
  }
  return rep;
}

Report roundtrip_verify(const BiorderedCategory& bc) {
  Report rep;
  BiorderedCategory back = build_category(build_semigroupoid(bc));
  const int n = bc.cat.size();
  for (Id i = 0; i < n; ++i) {
    for (Id j = 0; j < n; ++j) {
      if (bc.cat.comp.product(i, j) != back.cat.comp.product(i, j)) {
        rep.add("roundtrip/comp", {i, j});
      }
      if (bc.leq_l.leq(i, j) != back.leq_l.leq(i, j)) rep.add("roundtrip/leq_l", {i, j});
      if (bc.leq_r.leq(i, j) != back.leq_r.leq(i, j)) rep.add("roundtrip/leq_r", {i, j});
    }
  }
  std::set<Id> before(bc.cat.objects.begin(), bc.cat.objects.end());
  std::set<Id> after(back.cat.objects.begin(), back.cat.objects.end());
  for (Id e = 0; e < n; ++e) {
    if (before.count(e) != after.count(e)) rep.add("roundtrip/objects", {e});
  }
  for (Id i = 0; i < n; ++i) {
    if (bc.cat.dom[i] != back.cat.dom[i]) rep.add("roundtrip/dom", {i});
    if (bc.cat.ran[i] != back.cat.ran[i]) rep.add("roundtrip/ran", {i});
  }
  return rep;
}

namespace {

// Assigns one candidate per class (classes and candidate lists already
// ordered); on a full assignment `emit` may accept by returning true.
bool assign_classes(const std::vector<std::vector<Id>>& candidates, std::vector<Id>& chosen,
                    std::size_t at, const std::function<bool()>& emit) {
  if (at == candidates.size()) return emit();
  for (Id c : candidates[at]) {
    chosen[at] = c;
    if (assign_classes(candidates, chosen, at + 1, emit)) return true;
  }
  return false;
}

}  // namespace

std::optional<FiniteCategory> find_category_structure(const PartialTable& t) {
  const int n = t.size();

  std::vector<std::vector<char>> row(n), col(n);
  for (Id x = 0; x < n; ++x) {
    row[x].resize(n);
    col[x].resize(n);
    for (Id y = 0; y < n; ++y) {
      row[x][y] = t.defined(x, y) ? 1 : 0;
      col[x][y] = t.defined(y, x) ? 1 : 0;
    }
  }

  auto classes_of = [n](const std::vector<std::vector<char>>& pattern) {
    std::vector<std::vector<Id>> classes;
    std::vector<int> of(n, -1);
    for (Id x = 0; x < n; ++x) {
      if (of[x] >= 0) continue;
      of[x] = static_cast<int>(classes.size());
      classes.push_back({x});
      for (Id y = x + 1; y < n; ++y) {
        if (of[y] < 0 && pattern[y] == pattern[x]) {
          of[y] = of[x];
          classes.back().push_back(y);
        }
      }
    }
    return std::make_pair(classes, of);
  };

  auto [row_classes, row_of] = classes_of(row);
  auto [col_classes, col_of] = classes_of(col);

  std::vector<std::vector<Id>> right_ids(row_classes.size()), left_ids(col_classes.size());
  for (std::size_t a = 0; a < row_classes.size(); ++a) {
    for (Id e = 0; e < n; ++e) {
      bool ok = true;
      for (Id x : row_classes[a]) {
        auto p = t.product(x, e);
        if (!p || *p != x) ok = false;
      }
      if (ok) right_ids[a].push_back(e);
    }
    if (right_ids[a].empty()) return std::nullopt;
  }
  for (std::size_t b = 0; b < col_classes.size(); ++b) {
    for (Id e = 0; e < n; ++e) {
      bool ok = true;
      for (Id y : col_classes[b]) {
        auto p = t.product(e, y);
        if (!p || *p != y) ok = false;
      }
      if (ok) left_ids[b].push_back(e);
    }
    if (left_ids[b].empty()) return std::nullopt;
  }

  std::vector<Id> dom_choice(row_classes.size()), ran_choice(col_classes.size());
  std::optional<FiniteCategory> found;
  const std::function<bool()> try_ran = [&]() {
    FiniteCategory c;
    c.comp = t;
    c.dom.resize(n);
    c.ran.resize(n);
    std::set<Id> objs;
    for (Id x = 0; x < n; ++x) {
      c.dom[x] = dom_choice[row_of[x]];
      c.ran[x] = ran_choice[col_of[x]];
      objs.insert(c.dom[x]);
      objs.insert(c.ran[x]);
    }
    c.objects.assign(objs.begin(), objs.end());
    if (!check_category(c).pass()) return false;
    found = std::move(c);
    return true;
  };
  const std::function<bool()> try_dom = [&]() {
    return assign_classes(left_ids, ran_choice, 0, try_ran);
  };
  assign_classes(right_ids, dom_choice, 0, try_dom);
  return found;
}

std::optional<FiniteCategory> extend_category_structure(const UnaryStructure& u) {
  Report pre = verify_structure(u, AxiomKind::TwoSidedEhresmann);
  if (!pre.pass()) {
    throw PreconditionError("not a two-sided Ehresmann semigroupoid", std::move(pre));
  }

  const std::vector<Id> proj = projection_union(u);
  const int k = static_cast<int>(proj.size());
  PartialTable sub = restrict_to(u.table, proj);

  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<Id> pool;
    for (int i = 0; i < k; ++i) {
      if (mask >> i & 1) pool.push_back(i);
    }

    // d assigns to each projection an identity above it in the pool;
    // definedness must mirror d-fibers (e f defined iff d(e) = d(f)).
    std::vector<Id> d(k, -1);
    std::function<bool(int)> assign = [&](int e) -> bool {
      if (e == k) return true;
      for (Id o : pool) {
        auto p = sub.product(e, o);
        if (!p || *p != e) continue;
        bool consistent = true;
        for (Id f = 0; f < e && consistent; ++f) {
          if (sub.defined(e, f) != (d[f] == o)) consistent = false;
        }
        if (!consistent) continue;
        d[e] = o;
        if (assign(e + 1)) return true;
        d[e] = -1;
      }
      return false;
    };
    if (!assign(0)) continue;

    FiniteCategory on_proj;
    on_proj.comp = sub;
    on_proj.objects = pool;
    on_proj.dom = d;
    on_proj.ran = d;
    if (!check_category(on_proj).pass()) continue;

    const int n = u.size();
    std::vector<int> pos(n, -1);
    for (int i = 0; i < k; ++i) pos[proj[i]] = i;
    FiniteCategory lifted;
    lifted.comp = u.table;
    lifted.dom.resize(n);
    lifted.ran.resize(n);
    std::set<Id> objs;
    for (Id s = 0; s < n; ++s) {
      lifted.dom[s] = proj[d[pos[(*u.star)[s]]]];
      lifted.ran[s] = proj[d[pos[(*u.plus)[s]]]];
      objs.insert(lifted.dom[s]);
      objs.insert(lifted.ran[s]);
    }
    lifted.objects.assign(objs.begin(), objs.end());
    if (!check_category(lifted).pass()) {
      throw std::logic_error("projection category did not lift to the carrier");
    }
    return lifted;
  }
  return std::nullopt;
}

ClassifyResult classify(const UnaryStructure& u) {
  Report pre = verify_structure(u, AxiomKind::TwoSidedEhresmann);
  if (!pre.pass()) {
    throw PreconditionError("not a two-sided Ehresmann semigroupoid", std::move(pre));
  }

  ClassifyResult result;
  ClassFlags& flags = result.flags;
  Report& rep = result.report;
  flags.is_semigroupoid = true;
  flags.is_ehresmann = true;

  BiorderedCategory b = build_category(u);
  if (!check_lbec(b).report.pass()) {
    throw std::logic_error("built category fails the biordered Ehresmann axioms");
  }
  const bool orders_equal = b.leq_l == b.leq_r;

  flags.is_restriction = verify_structure(u, AxiomKind::TwoSidedRestriction).pass();
  bool lic_route =
      orders_equal && check_locally_inductive(b.cat, b.leq_l, LicGoal::Category).report.pass();
  if (flags.is_restriction != lic_route) {
    rep.add("classify/restriction-routes", {},
            flags.is_restriction ? "direct only" : "category only");
  }

  InverseResult inv = check_inverse(u.table);
  flags.is_inverse = inv.canonical.has_value() && inv.canonical->plus == u.plus &&
                     inv.canonical->star == u.star;
  LicResult lig;
  if (orders_equal) lig = check_locally_inductive(b.cat, b.leq_l, LicGoal::Groupoid);
  bool lig_route = orders_equal && lig.report.pass();
  if (flags.is_inverse != lig_route) {
    rep.add("classify/inverse-routes", {}, flags.is_inverse ? "direct only" : "category only");
  }
  if (flags.is_inverse && lig_route && lig.inverse != inv.inverse) {
    rep.add("classify/inverse-maps", {}, "groupoid inverse differs from pseudo-inverse");
  }

  flags.is_semigroup = u.table.total();
  const std::vector<Id> proj = projection_union(u);
  LocalMeetResult proj_lms = check_local_meet_semilattice(restrict_to(u.table, proj));
  if (!proj_lms.report.pass()) {
    rep.add("classify/projection-lms", {}, "projections fail the local meet-semilattice laws");
  }
  flags.projections_meet_semilattice =
      proj_lms.report.pass() && proj_lms.blocks.size() <= 1;
  if (flags.is_semigroup != flags.projections_meet_semilattice) {
    rep.add("classify/semigroup-routes", {},
            flags.is_semigroup ? "total, projections not a meet-semilattice"
                               : "projections total, table partial");
  }

  flags.admits_category_structure = find_category_structure(u.table).has_value();
  flags.projections_locally_complete = extend_category_structure(u).has_value();
  if (flags.admits_category_structure != flags.projections_locally_complete) {
    rep.add("classify/category-routes", {},
            flags.admits_category_structure ? "direct only" : "projections only");
  }

  auto yn = [](bool v) { return v ? "true" : "false"; };
  rep.add_fact("is_restriction", yn(flags.is_restriction));
  rep.add_fact("is_inverse", yn(flags.is_inverse));
  rep.add_fact("is_semigroup", yn(flags.is_semigroup));
  rep.add_fact("admits_category_structure", yn(flags.admits_category_structure));
  rep.add_fact("projections_meet_semilattice", yn(flags.projections_meet_semilattice));
  rep.add_fact("projections_locally_complete", yn(flags.projections_locally_complete));
  return result;
}

}  // namespace sgpd
