#include "sgpd/morphisms.hpp"

#include <stdexcept>

namespace sgpd {

void validate_map(const CarrierMap& m) {
  if (m.src_size < 0 || m.dst_size < 0 ||
      static_cast<int>(m.send.size()) != m.src_size) {
    throw InputError("carrier map size mismatch");
  }
  for (Id v : m.send) {
    if (v < 0 || v >= m.dst_size) throw InputError("carrier map value out of range");
  }
}

CarrierMap compose_maps(const CarrierMap& f, const CarrierMap& g) {
  validate_map(f);
  validate_map(g);
  if (f.dst_size != g.src_size) throw InputError("maps are not composable");
  CarrierMap h;
  h.src_size = f.src_size;
  h.dst_size = g.dst_size;
  h.send.resize(f.send.size());
  for (std::size_t i = 0; i < f.send.size(); ++i) h.send[i] = g.send[f.send[i]];
  return h;
}

namespace {

void check_m1(const PartialTable& src, const PartialTable& dst, const std::vector<Id>& phi,
              Report& rep) {
  for (Id s = 0; s < src.size(); ++s) {
    for (Id t = 0; t < src.size(); ++t) {
      auto st = src.product(s, t);
      if (!st) continue;
      auto img = dst.product(phi[s], phi[t]);
      if (!img || *img != phi[*st]) {
        rep.add("m1", {s, t}, img ? "phi(st) != phi(s)phi(t)" : "image product undefined");
      }
    }
  }
}

void check_m2(const UnaryStructure& src, const UnaryStructure& dst, const std::vector<Id>& phi,
              Report& rep) {
  for (Id s = 0; s < src.size(); ++s) {
    if (phi[(*src.plus)[s]] != (*dst.plus)[phi[s]]) rep.add("m2", {s}, "plus");
    if (phi[(*src.star)[s]] != (*dst.star)[phi[s]]) rep.add("m2", {s}, "star");
  }
}

void check_vee(const UnaryStructure& src, const UnaryStructure& dst, const OrderRel& leq,
               const std::vector<Id>& phi, VeeVariant variant, Report& rep) {
  for (Id s = 0; s < src.size(); ++s) {
    for (Id t = 0; t < src.size(); ++t) {
      auto st = src.table.product(s, t);
      if (!st) continue;
      auto img = dst.table.product(phi[s], phi[t]);
      if (!img || !leq.leq(phi[*st], *img)) {
        rep.add("vm1", {s, t}, img ? "phi(st) not below phi(s)phi(t)" : "image product undefined");
      }
    }
  }
  for (Id s = 0; s < src.size(); ++s) {
    if (variant == VeeVariant::ProjectionEquality) {
      if (phi[(*src.plus)[s]] != (*dst.plus)[phi[s]]) rep.add("vm2", {s}, "plus");
      if (phi[(*src.star)[s]] != (*dst.star)[phi[s]]) rep.add("vm2", {s}, "star");
    } else {
      if (!leq.leq(phi[(*src.plus)[s]], (*dst.plus)[phi[s]])) rep.add("vm2", {s}, "plus");
      if (!leq.leq(phi[(*src.star)[s]], (*dst.star)[phi[s]])) rep.add("vm2", {s}, "star");
    }
  }
}

void check_wedge(const UnaryStructure& src, const UnaryStructure& dst, const OrderRel& leq,
                 const std::vector<Id>& phi, Report& rep) {
  const auto& dplus = *dst.plus;
  const auto& dstar = *dst.star;
  for (Id s = 0; s < src.size(); ++s) {
    for (Id t = 0; t < src.size(); ++t) {
      auto st = src.table.product(s, t);
      if (!st) continue;
      auto a = dst.table.product(phi[s], phi[t]);
      auto b = dst.table.product(dplus[phi[s]], phi[*st]);
      auto c = dst.table.product(phi[*st], dstar[phi[t]]);
      if (!a || !b || !c) {
        rep.add("wm1", {s, t}, "image product undefined");
      } else if (*a != *b || *b != *c) {
        rep.add("wm1", {s, t}, "three expressions differ");
      }
    }
  }
  for (Id s = 0; s < src.size(); ++s) {
    if (!leq.leq(dplus[phi[s]], phi[(*src.plus)[s]])) rep.add("wm2", {s}, "plus");
    if (!leq.leq(dstar[phi[s]], phi[(*src.star)[s]])) rep.add("wm2", {s}, "star");
  }
}

struct CatView {
  const BiorderedCategory* bc;
  const LbecTables* tables;
  const PartialTable* pp;
};

void check_inductive(const CatView& src, const CatView& dst, const std::vector<Id>& phi,
                     Report& rep) {
  const FiniteCategory& s = src.bc->cat;
  const FiniteCategory& d = dst.bc->cat;
  for (Id x = 0; x < s.size(); ++x) {
    if (phi[s.dom[x]] != d.dom[phi[x]] || phi[s.ran[x]] != d.ran[phi[x]]) rep.add("if1", {x});
  }
  for (Id x = 0; x < s.size(); ++x) {
    for (Id y = 0; y < s.size(); ++y) {
      auto xy = s.comp.product(x, y);
      if (!xy) continue;
      auto img = d.comp.product(phi[x], phi[y]);
      if (!img || *img != phi[*xy]) rep.add("if2", {x, y});
    }
  }
  for (Id x = 0; x < s.size(); ++x) {
    for (Id y = 0; y < s.size(); ++y) {
      if (src.bc->leq_l.leq(x, y) && !dst.bc->leq_l.leq(phi[x], phi[y])) rep.add("if3", {x, y});
      if (src.bc->leq_r.leq(x, y) && !dst.bc->leq_r.leq(phi[x], phi[y])) rep.add("if4", {x, y});
    }
  }
  for (Id e : s.objects) {
    for (Id f : s.objects) {
      auto m = src.tables->meet.product(e, f);
      if (!m) continue;
      auto dm = dst.tables->meet.product(phi[e], phi[f]);
      if (!dm || *dm != phi[*m]) rep.add("if5", {e, f});
    }
  }
}

void check_ordered_functor(const CatView& src, const CatView& dst, const std::vector<Id>& phi,
                           Report& rep) {
  const FiniteCategory& s = src.bc->cat;
  const FiniteCategory& d = dst.bc->cat;
  for (Id x = 0; x < s.size(); ++x) {
    if (phi[s.dom[x]] != d.dom[phi[x]] || phi[s.ran[x]] != d.ran[phi[x]]) rep.add("of1", {x});
  }
  for (Id x = 0; x < s.size(); ++x) {
    for (Id y = 0; y < s.size(); ++y) {
      auto xy = s.comp.product(x, y);
      if (xy) {
        auto img = d.comp.product(phi[x], phi[y]);
        if (!img || *img != phi[*xy]) rep.add("of2", {x, y});
      }
      if (src.bc->leq_l.leq(x, y) && !dst.bc->leq_l.leq(phi[x], phi[y])) rep.add("of3", {x, y});
    }
  }
}

void check_prefunctor(const CatView& src, const CatView& dst, const std::vector<Id>& phi,
                      Report& rep) {
  const FiniteCategory& s = src.bc->cat;
  const FiniteCategory& d = dst.bc->cat;
  const OrderRel& leq = dst.bc->leq_l;

  for (Id e : s.objects) {
    if (!d.is_object(phi[e])) rep.add("ip-wd-objects", {e});
  }
  for (Id x = 0; x < s.size(); ++x) {
    for (Id y = 0; y < s.size(); ++y) {
      if (src.pp->defined(x, y) && !dst.pp->defined(phi[x], phi[y])) {
        rep.add("ip-wd-defined", {x, y});
      }
    }
  }

  for (Id x = 0; x < s.size(); ++x) {
    for (Id y = 0; y < s.size(); ++y) {
      auto xy = s.comp.product(x, y);
      if (!xy) continue;
      auto img = dst.pp->product(phi[x], phi[y]);
      if (!img || !leq.leq(*img, phi[*xy])) rep.add("ip1", {x, y});
    }
  }
  for (Id x = 0; x < s.size(); ++x) {
    if (!leq.leq(d.dom[phi[x]], phi[s.dom[x]])) rep.add("ip2", {x}, "dom");
    if (!leq.leq(d.ran[phi[x]], phi[s.ran[x]])) rep.add("ip2", {x}, "ran");
  }
  for (Id x = 0; x < s.size(); ++x) {
    for (Id y = 0; y < s.size(); ++y) {
      if (src.bc->leq_l.leq(x, y) && !leq.leq(phi[x], phi[y])) rep.add("ip3", {x, y});
    }
  }
  for (Id x = 0; x < s.size(); ++x) {
    for (Id e : s.objects) {
      auto xe = src.pp->product(x, e);
      if (xe) {
        auto img = dst.pp->product(phi[x], phi[e]);
        if (!img || !leq.leq(*img, phi[*xe])) rep.add("ip4", {x, e}, "right");
      }
      auto ex = src.pp->product(e, x);
      if (ex) {
        auto img = dst.pp->product(phi[e], phi[x]);
        if (!img || !leq.leq(*img, phi[*ex])) rep.add("ip4", {e, x}, "left");
      }
    }
  }
  for (Id x = 0; x < s.size(); ++x) {
    for (Id y = 0; y < s.size(); ++y) {
      auto xy = src.pp->product(x, y);
      if (!xy) continue;
      auto img = dst.pp->product(phi[x], phi[y]);
      if (!img) continue;  // already tagged ip-wd-defined
      auto rm = dst.tables->meet.product(d.ran[phi[x]], d.ran[phi[*xy]]);
      if (!rm || d.ran[*img] != *rm) rep.add("ip5", {x, y}, "ran");
      auto dm = dst.tables->meet.product(d.dom[phi[*xy]], d.dom[phi[y]]);
      if (!dm || d.dom[*img] != *dm) rep.add("ip5", {x, y}, "dom");
    }
  }
}

}  // namespace

Report check_sgpd_map(const UnaryStructure& src, const UnaryStructure& dst, const CarrierMap& m,
                      SgpdMapKind kind, VeeVariant variant) {
  validate_map(m);
  if (m.src_size != src.size() || m.dst_size != dst.size()) {
    throw InputError("carrier map does not fit the structures");
  }
  const AxiomKind need = kind == SgpdMapKind::TwoOneOne ? AxiomKind::TwoSidedEhresmann
                                                        : AxiomKind::TwoSidedRestriction;
  if (!verify_structure(src, need).pass() || !verify_structure(dst, need).pass()) {
    throw InputError("structure does not satisfy the axioms required by the map kind");
  }

  Report rep;
  switch (kind) {
    case SgpdMapKind::TwoOneOne:
      check_m1(src.table, dst.table, m.send, rep);
      check_m2(src, dst, m.send, rep);
      break;
    case SgpdMapKind::Vee:
      check_vee(src, dst, derive_order(dst, Side::Left), m.send, variant, rep);
      break;
    case SgpdMapKind::Wedge:
      check_wedge(src, dst, derive_order(dst, Side::Left), m.send, rep);
      break;
  }
  return rep;
}

Report check_cat_functor(const BiorderedCategory& src, const BiorderedCategory& dst,
                         const CarrierMap& m, CatMapKind kind) {
  validate_map(m);
  if (m.src_size != src.cat.size() || m.dst_size != dst.cat.size()) {
    throw InputError("carrier map does not fit the categories");
  }
  LbecResult ls = check_lbec(src);
  LbecResult ld = check_lbec(dst);
  if (!ls.report.pass() || !ld.report.pass()) {
    throw InputError("category does not satisfy the biordered Ehresmann axioms");
  }
  if (kind != CatMapKind::Inductive && (src.leq_l != src.leq_r || dst.leq_l != dst.leq_r)) {
    throw InputError("functor kind requires a single order on both categories");
  }

  PartialTable pp_src = pseudo_product_table(src, *ls.tables);
  PartialTable pp_dst = pseudo_product_table(dst, *ld.tables);
  CatView sv{&src, &*ls.tables, &pp_src};
  CatView dv{&dst, &*ld.tables, &pp_dst};

  Report rep;
  switch (kind) {
    case CatMapKind::Inductive:
      check_inductive(sv, dv, m.send, rep);
      break;
    case CatMapKind::Ordered:
      check_ordered_functor(sv, dv, m.send, rep);
      break;
    case CatMapKind::Prefunctor:
      check_prefunctor(sv, dv, m.send, rep);
      break;
  }
  return rep;
}

PreparedStructure prepare_structure(const UnaryStructure& u) {
  if (!verify_structure(u, AxiomKind::TwoSidedEhresmann).pass()) {
    throw InputError("structure is not two-sided Ehresmann");
  }
  PreparedStructure p;
  p.u = u;
  p.restriction = verify_structure(u, AxiomKind::TwoSidedRestriction).pass();
  p.bc = build_category(u);
  LbecResult lb = check_lbec(p.bc);
  if (!lb.report.pass()) {
    throw std::logic_error("built category fails the biordered Ehresmann axioms");
  }
  p.tables = std::move(*lb.tables);
  p.pp = pseudo_product_table(p.bc, p.tables);
  p.natural_order = derive_order(u, Side::Left);
  return p;
}

CorrespondenceResult verify_correspondence(const PreparedStructure& src,
                                           const PreparedStructure& dst, const CarrierMap& m) {
  validate_map(m);
  if (m.src_size != src.u.size() || m.dst_size != dst.u.size()) {
    throw InputError("carrier map does not fit the structures");
  }

  CorrespondenceResult result;
  Report& rep = result.report;
  CatView sv{&src.bc, &src.tables, &src.pp};
  CatView dv{&dst.bc, &dst.tables, &dst.pp};

  Report r211;
  check_m1(src.u.table, dst.u.table, m.send, r211);
  check_m2(src.u, dst.u, m.send, r211);
  Report rif;
  check_inductive(sv, dv, m.send, rif);
  result.verdicts.two_one_one = r211.pass();
  result.verdicts.inductive = rif.pass();
  if (r211.pass() != rif.pass()) {
    rep.add("esn-m", {}, r211.pass() ? "map only" : "functor only");
  }

  if (src.restriction && dst.restriction) {
    Report rv;
    check_vee(src.u, dst.u, dst.natural_order, m.send, VeeVariant::ProjectionEquality, rv);
    Report ro;
    check_ordered_functor(sv, dv, m.send, ro);
    result.verdicts.vee = rv.pass();
    result.verdicts.ordered = ro.pass();
    if (rv.pass() != ro.pass()) rep.add("esn-v", {}, rv.pass() ? "map only" : "functor only");

    Report rw;
    check_wedge(src.u, dst.u, dst.natural_order, m.send, rw);
    Report rp;
    check_prefunctor(sv, dv, m.send, rp);
    result.verdicts.wedge = rw.pass();
    result.verdicts.prefunctor = rp.pass();
    if (rw.pass() != rp.pass()) rep.add("esn-w", {}, rw.pass() ? "map only" : "functor only");
  }

  auto yn = [](bool v) { return v ? "true" : "false"; };
  rep.add_fact("two_one_one", yn(result.verdicts.two_one_one));
  rep.add_fact("inductive", yn(result.verdicts.inductive));
  if (result.verdicts.vee) {
    rep.add_fact("vee", yn(*result.verdicts.vee));
    rep.add_fact("ordered", yn(*result.verdicts.ordered));
    rep.add_fact("wedge", yn(*result.verdicts.wedge));
    rep.add_fact("prefunctor", yn(*result.verdicts.prefunctor));
  }
  return result;
}

CorrespondenceResult verify_correspondence(const UnaryStructure& src, const UnaryStructure& dst,
                                           const CarrierMap& m) {
  return verify_correspondence(prepare_structure(src), prepare_structure(dst), m);
}

}  // namespace sgpd
