#include "sgpd/lbec.hpp"

#include <algorithm>
#include <stdexcept>

#include "sgpd/local_meet.hpp"

namespace sgpd {

MeetResult derive_meet(const FiniteCategory& c, const OrderRel& o) {
  validate_category(c);
  if (o.size() != c.size()) throw InputError("order size mismatch");

  MeetResult result;
  result.meet = PartialTable(c.size());
  result.report.merge("object-order", check_partial_order(o.restrict_to(c.objects)));
  if (!result.report.pass()) return result;

  const auto& obj = c.objects;
  std::vector<int> comp_of(c.size(), -1);
  for (Id e : obj) {
    if (comp_of[e] >= 0) continue;
    std::vector<Id> component{e};
    comp_of[e] = static_cast<int>(result.components.size());
    for (std::size_t i = 0; i < component.size(); ++i) {
      for (Id f : obj) {
        if (comp_of[f] >= 0) continue;
        if (o.leq(component[i], f) || o.leq(f, component[i])) {
          comp_of[f] = comp_of[e];
          component.push_back(f);
        }
      }
    }
    std::sort(component.begin(), component.end());
    result.components.push_back(std::move(component));
  }

  for (Id e : obj) {
    for (Id f : obj) {
      if (comp_of[e] != comp_of[f]) continue;
      const auto& component = result.components[comp_of[e]];
      std::vector<Id> lower;
      for (Id w : component) {
        if (o.leq(w, e) && o.leq(w, f)) lower.push_back(w);
      }
      Id glb = -1;
      for (Id m : lower) {
        bool greatest = true;
        for (Id w : lower) {
          if (!o.leq(w, m)) greatest = false;
        }
        if (greatest) {
          glb = m;
          break;
        }
      }
      if (glb < 0) {
        result.report.add("lms-glb", {e, f}, "component pair without meet");
      } else {
        result.meet.set(e, f, glb);
      }
    }
  }

  if (result.report.pass()) {
    result.report.merge("lms", check_local_meet_semilattice(restrict_to(result.meet, obj)).report);
  }
  return result;
}

LbecResult check_lbec(const BiorderedCategory& bc) {
  LbecResult result;
  Report& rep = result.report;
  const FiniteCategory& c = bc.cat;
  const int n = c.size();

  rep.merge("cat", check_category(c));

  OrderedResult ec1 = check_ordered(c, bc.leq_l, OrderedMode::WithCorestrictions);
  rep.merge("ec1", ec1.report);
  OrderedResult ec2 = check_ordered(c, bc.leq_r, OrderedMode::WithRestrictions);
  rep.merge("ec2", ec2.report);

  bool ec4_ok = true;
  for (Id e : c.objects) {
    for (Id f : c.objects) {
      if (bc.leq_l.leq(e, f) != bc.leq_r.leq(e, f)) {
        rep.add("ec4", {e, f}, bc.leq_l.leq(e, f) ? "left only" : "right only");
        ec4_ok = false;
      }
    }
  }
  if (!ec4_ok) rep.add_fact("conditional-on-ec4", "object order taken from leq_l");

  MeetResult ec3 = derive_meet(c, bc.leq_l);
  rep.merge("ec3", ec3.report);

  OrderRel lr = bc.leq_l.compose(bc.leq_r);
  OrderRel rl = bc.leq_r.compose(bc.leq_l);
  for (Id x = 0; x < n; ++x) {
    for (Id y = 0; y < n; ++y) {
      if (lr.leq(x, y) != rl.leq(x, y)) {
        rep.add("ec5", {x, y}, lr.leq(x, y) ? "l then r only" : "r then l only");
      }
    }
  }

  const bool have_restr = ec2.restriction.has_value();
  const bool have_corestr = ec1.corestriction.has_value();

  if (have_restr) {
    for (Id x = 0; x < n; ++x) {
      for (Id y = 0; y < n; ++y) {
        if (!bc.leq_l.leq(x, y)) continue;
        for (Id e : c.objects) {
          auto m1 = ec3.meet.product(c.dom[x], e);
          if (!m1) continue;
          auto m2 = ec3.meet.product(c.dom[y], e);
          if (!m2) {
            rep.add("ec6-wd", {x, y, e}, "dom(y)^e undefined");
            continue;
          }
          int r1 = (*ec2.restriction)[x][*m1];
          int r2 = (*ec2.restriction)[y][*m2];
          if (r1 < 0 || r2 < 0) {
            rep.add("ec6-wd", {x, y, e}, "restriction missing");
            continue;
          }
          if (!bc.leq_l.leq(r1, r2)) rep.add("ec6", {x, y, e});
        }
      }
    }
  }

  if (have_corestr) {
    for (Id x = 0; x < n; ++x) {
      for (Id y = 0; y < n; ++y) {
        if (!bc.leq_r.leq(x, y)) continue;
        for (Id e : c.objects) {
          auto m1 = ec3.meet.product(e, c.ran[x]);
          if (!m1) continue;
          auto m2 = ec3.meet.product(e, c.ran[y]);
          if (!m2) {
            rep.add("ec7-wd", {x, y, e}, "e^ran(y) undefined");
            continue;
          }
          int c1 = (*ec1.corestriction)[*m1][x];
          int c2 = (*ec1.corestriction)[*m2][y];
          if (c1 < 0 || c2 < 0) {
            rep.add("ec7-wd", {x, y, e}, "corestriction missing");
            continue;
          }
          if (!bc.leq_r.leq(c1, c2)) rep.add("ec7", {x, y, e});
        }
      }
    }
  }

  if (rep.pass()) {
    result.tables = LbecTables{std::move(*ec2.restriction), std::move(*ec1.corestriction),
                               std::move(ec3.meet)};
  }
  return result;
}

std::optional<Id> pseudo_product(const BiorderedCategory& bc, const LbecTables& tables, Id x,
                                 Id y) {
  auto e = tables.meet.product(bc.cat.dom[x], bc.cat.ran[y]);
  if (!e) return std::nullopt;
  int z1 = tables.restriction[x][*e];
  int z2 = tables.corestriction[*e][y];
  if (z1 < 0 || z2 < 0) throw std::logic_error("missing (co)restriction for defined meet");
  auto w = bc.cat.comp.product(z1, z2);
  if (!w) throw std::logic_error("pseudo-product factors not composable");
  return *w;
}

PartialTable pseudo_product_table(const BiorderedCategory& bc, const LbecTables& tables) {
  const int n = bc.cat.size();
  PartialTable out(n);
  for (Id x = 0; x < n; ++x) {
    for (Id y = 0; y < n; ++y) {
      auto p = pseudo_product(bc, tables, x, y);
      if (p) out.set(x, y, *p);
    }
  }
  out.set_labels(bc.cat.comp.labels());
  return out;
}

Report check_pseudo_product_laws(const BiorderedCategory& bc, const LbecTables& tables) {
  Report rep;
  const FiniteCategory& c = bc.cat;
  const int n = c.size();
  PartialTable pp = pseudo_product_table(bc, tables);

  for (Id x = 0; x < n; ++x) {
    for (Id y = 0; y < n; ++y) {
      bool d1 = pp.defined(x, y);
      if (pp.defined(x, c.ran[y]) != d1) rep.add("pp-def", {x, y}, "x ox ran(y) differs");
      if (pp.defined(c.dom[x], y) != d1) rep.add("pp-def", {x, y}, "dom(x) ox y differs");
    }
  }

  rep.merge("pp-assoc", check_associativity(pp));

  for (Id x = 0; x < n; ++x) {
    for (Id e : c.objects) {
      if (!bc.leq_r.leq(e, c.dom[x])) continue;
      int ze = tables.restriction[x][e];
      if (ze < 0) continue;
      auto via_pp = pp.product(x, e);
      if (!via_pp || *via_pp != ze) rep.add("pp-restr-b", {x, e});
      if (!bc.leq_r.leq(ze, x)) rep.add("pp-restr-nest", {x, e}, "x|e not below x");
      for (Id f : c.objects) {
        if (!bc.leq_r.leq(f, e)) continue;
        int zf = tables.restriction[x][f];
        int nested = tables.restriction[ze][f];
        if (zf < 0 || nested < 0 || nested != zf) {
          rep.add("pp-restr-nest", {x, e, f}, "(x|e)|f != x|f");
        } else if (!bc.leq_r.leq(zf, ze)) {
          rep.add("pp-restr-nest", {x, e, f}, "x|f not below x|e");
        }
      }
    }
  }

  for (Id x = 0; x < n; ++x) {
    for (Id e : c.objects) {
      if (!bc.leq_l.leq(e, c.ran[x])) continue;
      int ze = tables.corestriction[e][x];
      if (ze < 0) continue;
      auto via_pp = pp.product(e, x);
      if (!via_pp || *via_pp != ze) rep.add("pp-corestr-b", {e, x});
    }
  }

  for (Id e : c.objects) {
    for (Id f : c.objects) {
      auto m = tables.meet.product(e, f);
      auto a = pp.product(e, f);
      auto b = pp.product(f, e);
      if (a != m || b != m) rep.add("pp-meet", {e, f});
    }
  }

  for (Id x = 0; x < n; ++x) {
    for (Id y = 0; y < n; ++y) {
      auto p = pp.product(x, y);
      if (!p) continue;
      auto pr = pp.product(x, c.ran[y]);
      auto pd = pp.product(c.dom[x], y);
      if (!pr || c.ran[*pr] != c.ran[*p]) rep.add("pp2a", {x, y}, "ran mismatch");
      if (!pd || c.dom[*pd] != c.dom[*p]) rep.add("pp2a", {x, y}, "dom mismatch");
    }
  }
  return rep;
}

LicResult check_locally_inductive(const FiniteCategory& c, const OrderRel& o, LicGoal goal) {
  LicResult result;
  Report& rep = result.report;
  const int n = c.size();

  rep.merge("cat", check_category(c));

  OrderedResult r1 = check_ordered(c, o, OrderedMode::WithRestrictions);
  rep.merge("ic1", r1.report);
  OrderedResult r2 = check_ordered(c, o, OrderedMode::WithCorestrictions);
  for (const Violation& v : r2.report.violations()) {
    if (v.axiom.rfind("Oc", 0) == 0 || v.axiom == "order-char") {
      rep.add("ic1/" + v.axiom, v.witness, v.note);
    }
  }

  MeetResult ic2 = derive_meet(c, o);
  rep.merge("ic2", ic2.report);

  bool lic_pass = rep.pass();
  LbecResult cross = check_lbec({c, o, o});
  if (cross.report.pass() != lic_pass) {
    throw std::logic_error("lic and single-order lbec verdicts disagree");
  }
  if (lic_pass) {
    result.tables = LbecTables{std::move(*r1.restriction), std::move(*r2.corestriction),
                               std::move(ic2.meet)};
  }

  if (goal == LicGoal::Groupoid) {
    std::vector<Id> inverse(n, -1);
    bool all_unique = true;
    for (Id x = 0; x < n; ++x) {
      std::vector<Id> found;
      for (Id y = 0; y < n; ++y) {
        auto xy = c.comp.product(x, y);
        auto yx = c.comp.product(y, x);
        if (xy && yx && *xy == c.ran[x] && *yx == c.dom[x]) found.push_back(y);
      }
      if (found.empty()) {
        rep.add("groupoid-exists", {x});
        all_unique = false;
      } else if (found.size() > 1) {
        rep.add("groupoid-unique", {x, found[0], found[1]});
        all_unique = false;
      } else {
        inverse[x] = found[0];
      }
    }
    if (all_unique) {
      bool ig1_ok = true;
      for (Id x = 0; x < n; ++x) {
        for (Id y = 0; y < n; ++y) {
          if (o.leq(x, y) && !o.leq(inverse[x], inverse[y])) {
            rep.add("ig1", {x, y});
            ig1_ok = false;
          }
        }
      }
      if (lic_pass && !ig1_ok) {
        throw std::logic_error("ig1 violated on a locally inductive groupoid");
      }
      result.inverse = std::move(inverse);
    }
  }
  return result;
}

Report check_restriction_corestriction_swap(const FiniteCategory& c, const OrderRel& o) {
  LicResult lic = check_locally_inductive(c, o, LicGoal::Category);
  if (!lic.report.pass()) {
    throw PreconditionError("not a locally inductive category", lic.report);
  }
  Report rep;
  const LbecTables& t = *lic.tables;
  for (Id x = 0; x < c.size(); ++x) {
    for (Id e : c.objects) {
      int z = t.restriction[x][e];
      if (z >= 0) {
        int back = t.corestriction[c.ran[z]][x];
        if (back != z) rep.add("rc-swap-a", {x, e}, back < 0 ? "corestriction missing" : "");
      }
      int w = t.corestriction[e][x];
      if (w >= 0) {
        int back = t.restriction[x][c.dom[w]];
        if (back != w) rep.add("rc-swap-b", {x, e}, back < 0 ? "restriction missing" : "");
      }
    }
  }
  return rep;
}

}  // namespace sgpd
