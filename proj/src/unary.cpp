#include "sgpd/unary.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sgpd {

namespace {

bool is_left(AxiomKind k) {
  return k == AxiomKind::LeftEhresmann || k == AxiomKind::LeftRestriction ||
         k == AxiomKind::TwoSidedEhresmann || k == AxiomKind::TwoSidedRestriction;
}

bool is_right(AxiomKind k) {
  return k == AxiomKind::RightEhresmann || k == AxiomKind::RightRestriction ||
         k == AxiomKind::TwoSidedEhresmann || k == AxiomKind::TwoSidedRestriction;
}

bool is_two_sided(AxiomKind k) {
  return k == AxiomKind::TwoSidedEhresmann || k == AxiomKind::TwoSidedRestriction;
}

bool is_restriction(AxiomKind k) {
  return k == AxiomKind::LeftRestriction || k == AxiomKind::RightRestriction ||
         k == AxiomKind::TwoSidedRestriction;
}

std::string render_set(const std::vector<Id>& xs) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ",";
    os << xs[i];
  }
  os << "}";
  return os.str();
}

// Left-side axioms over `un` = plus (or, mirrored, star).  `mirror` swaps every
// product's argument order, turning the left family into the right family.
void check_one_side(const PartialTable& t, const std::vector<Id>& un, const std::string& tag,
                    bool restriction, bool mirror, Report& rep) {
  const int n = t.size();
  auto prod = [&](Id a, Id b) { return mirror ? t.product(b, a) : t.product(a, b); };

  for (Id s = 0; s < n; ++s) {
    auto p = prod(un[s], s);
    if (!p || *p != s) rep.add(tag + "1", {s}, p ? "value differs" : "product undefined");
  }
  for (Id s = 0; s < n; ++s) {
    for (Id u = 0; u < n; ++u) {
      auto ef = prod(un[s], un[u]);
      if (!ef) continue;
      auto fe = prod(un[u], un[s]);
      if (!fe || *fe != *ef) {
        rep.add(tag + "2", {s, u}, fe ? "values differ" : "reverse product undefined");
      }
      auto et = prod(un[s], u);
      if (!et || un[*et] != *ef) {
        rep.add(tag + "3", {s, u}, et ? "projection differs" : "product undefined");
      }
    }
  }
  for (Id s = 0; s < n; ++s) {
    for (Id u = 0; u < n; ++u) {
      auto st = prod(s, u);
      if (!st) continue;
      auto sf = prod(s, un[u]);
      if (!sf) {
        rep.add(tag + "4", {s, u}, "s t+ undefined");
        continue;
      }
      if (!restriction) {
        if (un[*st] != un[*sf]) rep.add(tag + "4", {s, u}, "(st)+ != (s t+)+");
      } else {
        auto es = prod(un[*st], s);
        if (!es) rep.add(tag + "4", {s, u}, "(st)+ s undefined");
        else if (*es != *sf) rep.add(tag + "4", {s, u}, "s t+ != (st)+ s");
      }
    }
  }
}

}  // namespace

void validate_unary(const UnaryStructure& u) {
  const int n = u.size();
  for (const auto& m : {u.plus, u.star}) {
    if (!m) continue;
    if (static_cast<int>(m->size()) != n) throw InputError("unary map size mismatch");
    for (Id v : *m) {
      if (v < 0 || v >= n) throw InputError("unary map value out of range");
    }
  }
}

Report check_unary_axioms(const UnaryStructure& u, AxiomKind kind) {
  validate_unary(u);
  if (is_left(kind) && !u.plus) throw InputError("axiom kind requires plus map");
  if (is_right(kind) && !u.star) throw InputError("axiom kind requires star map");

  Report rep;
  const bool restr = is_restriction(kind);
  if (is_left(kind)) {
    check_one_side(u.table, *u.plus, restr ? "lr" : "le", restr, false, rep);
  }
  if (is_right(kind)) {
    check_one_side(u.table, *u.star, restr ? "rr" : "re", restr, true, rep);
  }
  if (is_two_sided(kind)) {
    const auto& plus = *u.plus;
    const auto& star = *u.star;
    for (Id s = 0; s < u.size(); ++s) {
      if (star[plus[s]] != plus[s]) rep.add("E", {s}, "(s+)* != s+");
      if (plus[star[s]] != star[s]) rep.add("E", {s}, "(s*)+ != s*");
    }
  }

  if (u.plus) rep.add_fact("plus_image", render_set(plus_image(u)));
  if (u.star) rep.add_fact("star_image", render_set(star_image(u)));
  if (u.plus && u.star) {
    rep.add_fact("projections_coincide", plus_image(u) == star_image(u) ? "true" : "false");
  }
  return rep;
}

Report verify_structure(const UnaryStructure& u, AxiomKind kind) {
  Report rep = check_associativity(u.table);
  rep.merge(check_unary_axioms(u, kind));
  return rep;
}

namespace {
std::vector<Id> image_of(const std::vector<Id>& m) {
  std::set<Id> s(m.begin(), m.end());
  return std::vector<Id>(s.begin(), s.end());
}
}  // namespace

std::vector<Id> plus_image(const UnaryStructure& u) {
  if (!u.plus) throw InputError("plus map absent");
  return image_of(*u.plus);
}

std::vector<Id> star_image(const UnaryStructure& u) {
  if (!u.star) throw InputError("star map absent");
  return image_of(*u.star);
}

std::vector<Id> projection_union(const UnaryStructure& u) {
  std::set<Id> s;
  if (!u.plus && !u.star) throw InputError("no unary map present");
  if (u.plus) {
    auto p = plus_image(u);
    s.insert(p.begin(), p.end());
  }
  if (u.star) {
    auto q = star_image(u);
    s.insert(q.begin(), q.end());
  }
  return std::vector<Id>(s.begin(), s.end());
}

OrderRel derive_order(const UnaryStructure& u, Side side) {
  const int n = u.size();
  const auto& un = side == Side::Left ? u.plus : u.star;
  if (!un) throw InputError(side == Side::Left ? "plus map absent" : "star map absent");

  OrderRel r(n);
  for (Id s = 0; s < n; ++s) {
    for (Id t = 0; t < n; ++t) {
      auto p = side == Side::Left ? u.table.product((*un)[s], t) : u.table.product(t, (*un)[s]);
      if (p && *p == s) r.set(s, t);
    }
  }

  if (!check_partial_order(r).pass()) {
    throw std::logic_error("derived natural order fails partial-order laws");
  }

  std::vector<Id> projections = image_of(*un);
  for (Id s = 0; s < n; ++s) {
    for (Id t = 0; t < n; ++t) {
      bool exists = false;
      for (Id e : projections) {
        auto p = side == Side::Left ? u.table.product(e, t) : u.table.product(t, e);
        if (p && *p == s) {
          exists = true;
          break;
        }
      }
      if (exists != r.leq(s, t)) {
        throw std::logic_error("derived natural order disagrees with existential form");
      }
    }
  }
  return r;
}

Report check_order_coincidence_on_projections(const UnaryStructure& u) {
  Report rep;
  OrderRel left = derive_order(u, Side::Left);
  OrderRel right = derive_order(u, Side::Right);
  for (Id e : projection_union(u)) {
    for (Id f : projection_union(u)) {
      if (left.leq(e, f) != right.leq(e, f)) {
        rep.add("lre-order", {e, f}, left.leq(e, f) ? "left only" : "right only");
      }
    }
  }
  if (verify_structure(u, AxiomKind::TwoSidedRestriction).pass()) {
    for (Id s = 0; s < u.size(); ++s) {
      for (Id t = 0; t < u.size(); ++t) {
        if (left.leq(s, t) != right.leq(s, t)) {
          rep.add("restriction-order", {s, t}, left.leq(s, t) ? "left only" : "right only");
        }
      }
    }
  }
  return rep;
}

}  // namespace sgpd
