#include "sgpd/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sgpd/inverse.hpp"
#include "sgpd/local_meet.hpp"

namespace sgpd {

bool is_category_class(StructureClass cls) {
  return cls == StructureClass::Lbec || cls == StructureClass::Lic ||
         cls == StructureClass::Lig;
}

namespace {

void check_size_guard(StructureClass cls, int n) {
  if (n < 0) throw SizeError("size must be nonnegative");
  const int cap = cls == StructureClass::LocalMeetSemilattice ? 4 : 3;
  if (n > cap) throw SizeError("size exceeds the enumeration guard");
}

// ---- partial table backtracking -------------------------------------------
// Cell states: -2 undecided, -1 undefined, k >= 0 value.

struct TableSearch {
  int n;
  std::vector<int> cells;

  explicit TableSearch(int n) : n(n), cells(static_cast<std::size_t>(n) * n, -2) {}
  int at(Id i, Id j) const { return cells[static_cast<std::size_t>(i) * n + j]; }
  void put(Id i, Id j, int v) { cells[static_cast<std::size_t>(i) * n + j] = v; }

  // True when some associativity instance is already violated by decided cells.
  bool assoc_violated() const {
    for (Id s = 0; s < n; ++s) {
      for (Id t = 0; t < n; ++t) {
        int st = at(s, t);
        for (Id r = 0; r < n; ++r) {
          int tr = at(t, r);
          int left = st >= 0 ? at(st, r) : -2;
          int right = tr >= 0 ? at(s, tr) : -2;
          bool h1 = st >= 0 && tr >= 0;
          bool h2 = st >= 0 && left >= 0;
          bool h3 = tr >= 0 && right >= 0;
          if (!(h1 || h2 || h3)) continue;
          if (st == -1 || tr == -1) return true;
          if (st >= 0 && left == -1) return true;
          if (tr >= 0 && right == -1) return true;
          if (left >= 0 && right >= 0 && left != right) return true;
        }
      }
    }
    return false;
  }

  PartialTable to_table() const {
    PartialTable t(n);
    for (Id i = 0; i < n; ++i) {
      for (Id j = 0; j < n; ++j) {
        if (at(i, j) >= 0) t.set(i, j, at(i, j));
      }
    }
    return t;
  }
};

// Emits every table whose decided cells never witness an associativity
// violation; `symmetric_idempotent` bakes in the meet-semilattice shape.
template <typename Fn>
void search_tables(int n, bool symmetric_idempotent, const Fn& leaf) {
  TableSearch ts(n);
  std::vector<std::pair<Id, Id>> free_cells;
  for (Id i = 0; i < n; ++i) {
    for (Id j = 0; j < n; ++j) {
      if (symmetric_idempotent && i == j) {
        ts.put(i, j, i);
      } else if (symmetric_idempotent && i > j) {
        continue;  // mirrored after each upper assignment
      } else {
        free_cells.emplace_back(i, j);
      }
    }
  }

  std::function<void(std::size_t)> rec = [&](std::size_t at) {
    if (at == free_cells.size()) {
      leaf(ts);
      return;
    }
    auto [i, j] = free_cells[at];
    for (int v = -1; v < n; ++v) {
      ts.put(i, j, v);
      if (symmetric_idempotent) ts.put(j, i, v);
      if (!ts.assoc_violated()) rec(at + 1);
    }
    ts.put(i, j, -2);
    if (symmetric_idempotent) ts.put(j, i, -2);
  };
  rec(0);
}

// Unary assignments over a completed table; candidates for plus[s] must
// already satisfy p s = s (resp. s q = s for star).
template <typename Fn>
void search_unary(const PartialTable& t, bool star_side, std::vector<Id>& out, std::size_t at,
                  const Fn& leaf) {
  const int n = t.size();
  if (at == static_cast<std::size_t>(n)) {
    leaf();
    return;
  }
  for (Id v = 0; v < n; ++v) {
    auto p = star_side ? t.product(static_cast<Id>(at), v) : t.product(v, static_cast<Id>(at));
    if (!p || *p != static_cast<Id>(at)) continue;
    out[at] = v;
    search_unary(t, star_side, out, at + 1, leaf);
  }
}

// ---- category backtracking -------------------------------------------------

template <typename Fn>
void search_categories(int n, const Fn& leaf) {
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<Id> objects, others;
    for (Id e = 0; e < n; ++e) {
      if (mask >> e & 1) objects.push_back(e);
      else others.push_back(e);
    }
    if (objects.empty() && n > 0) continue;

    std::vector<Id> dom(n), ran(n);
    for (Id e : objects) {
      dom[e] = e;
      ran[e] = e;
    }

    std::function<void(std::size_t, bool)> assign = [&](std::size_t at, bool ran_phase) {
      if (at == others.size()) {
        if (!ran_phase) {
          assign(0, true);
          return;
        }
        // Composition values over the dom/ran-induced pattern.
        std::vector<std::pair<Id, Id>> cells;
        for (Id x = 0; x < n; ++x) {
          for (Id y = 0; y < n; ++y) {
            if (dom[x] == ran[y]) cells.emplace_back(x, y);
          }
        }
        TableSearch ts(n);
        for (Id i = 0; i < n; ++i) {
          for (Id j = 0; j < n; ++j) ts.put(i, j, -1);
        }
        for (auto [x, y] : cells) ts.put(x, y, -2);

        std::function<void(std::size_t)> fill = [&](std::size_t c) {
          if (c == cells.size()) {
            FiniteCategory cat;
            cat.comp = ts.to_table();
            cat.objects = objects;
            cat.dom = dom;
            cat.ran = ran;
            if (check_category(cat).pass()) leaf(cat);
            return;
          }
          auto [x, y] = cells[c];
          for (Id v = 0; v < n; ++v) {
            if (dom[v] != dom[y] || ran[v] != ran[x]) continue;
            if (x == ran[y] && v != y) continue;
            if (y == dom[x] && v != x) continue;
            ts.put(x, y, v);
            if (!ts.assoc_violated()) fill(c + 1);
          }
          ts.put(x, y, -2);
        };
        fill(0);
        return;
      }
      for (Id o : objects) {
        (ran_phase ? ran : dom)[others[at]] = o;
        assign(at + 1, ran_phase);
      }
    };
    assign(0, false);
  }
}

// All reflexive relations that are partial orders; non-posets always fail the
// biordered/inductive checkers, so skipping them never changes a count.
std::vector<OrderRel> all_partial_orders(int n) {
  std::vector<std::pair<Id, Id>> off;
  for (Id i = 0; i < n; ++i) {
    for (Id j = 0; j < n; ++j) {
      if (i != j) off.emplace_back(i, j);
    }
  }
  std::vector<OrderRel> out;
  for (unsigned mask = 0; mask < (1u << off.size()); ++mask) {
    OrderRel r = OrderRel::discrete(n);
    for (std::size_t b = 0; b < off.size(); ++b) {
      if (mask >> b & 1) r.set(off[b].first, off[b].second);
    }
    if (check_partial_order(r).pass()) out.push_back(std::move(r));
  }
  return out;
}

// ---- serialization ----------------------------------------------------------

void render_cells(std::ostringstream& os, const PartialTable& t) {
  for (Id i = 0; i < t.size(); ++i) {
    for (Id j = 0; j < t.size(); ++j) {
      auto p = t.product(i, j);
      if (p) os << *p;
      else os << "u";
      os << ",";
    }
  }
}

std::string serialize(const UnaryStructure& u) {
  std::ostringstream os;
  os << "n" << u.size() << ";m:";
  render_cells(os, u.table);
  if (u.plus) {
    os << ";p:";
    for (Id v : *u.plus) os << v << ",";
  }
  if (u.star) {
    os << ";s:";
    for (Id v : *u.star) os << v << ",";
  }
  return os.str();
}

std::string serialize(const BiorderedCategory& bc) {
  std::ostringstream os;
  os << "n" << bc.cat.size() << ";m:";
  render_cells(os, bc.cat.comp);
  os << ";o:";
  for (Id e : bc.cat.objects) os << e << ",";
  os << ";d:";
  for (Id v : bc.cat.dom) os << v << ",";
  os << ";r:";
  for (Id v : bc.cat.ran) os << v << ",";
  os << ";L:";
  for (auto [i, j] : bc.leq_l.pairs()) os << i << "<" << j << ",";
  os << ";R:";
  for (auto [i, j] : bc.leq_r.pairs()) os << i << "<" << j << ",";
  return os.str();
}

template <typename S, typename PermuteFn>
std::string minimal_form(const S& s, int n, const PermuteFn& apply) {
  if (n > 8) throw SizeError("canonical form limited to small carriers");
  std::vector<Id> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  std::string best;
  do {
    std::string cur = serialize(apply(s, pi));
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(pi.begin(), pi.end()));
  if (best.empty()) best = serialize(s);
  return best;
}

UnaryStructure permute_unary(const UnaryStructure& u, const std::vector<Id>& pi) {
  UnaryStructure out;
  out.table = permute(u.table, pi);
  if (u.plus) {
    std::vector<Id> p(u.size());
    for (Id s = 0; s < u.size(); ++s) p[pi[s]] = pi[(*u.plus)[s]];
    out.plus = std::move(p);
  }
  if (u.star) {
    std::vector<Id> q(u.size());
    for (Id s = 0; s < u.size(); ++s) q[pi[s]] = pi[(*u.star)[s]];
    out.star = std::move(q);
  }
  return out;
}

BiorderedCategory permute_category(const BiorderedCategory& bc, const std::vector<Id>& pi) {
  const int n = bc.cat.size();
  BiorderedCategory out;
  out.cat.comp = permute(bc.cat.comp, pi);
  out.cat.objects.reserve(bc.cat.objects.size());
  for (Id e : bc.cat.objects) out.cat.objects.push_back(pi[e]);
  std::sort(out.cat.objects.begin(), out.cat.objects.end());
  out.cat.dom.resize(n);
  out.cat.ran.resize(n);
  for (Id x = 0; x < n; ++x) {
    out.cat.dom[pi[x]] = pi[bc.cat.dom[x]];
    out.cat.ran[pi[x]] = pi[bc.cat.ran[x]];
  }
  out.leq_l = bc.leq_l.permute(pi);
  out.leq_r = bc.leq_r.permute(pi);
  return out;
}

// ---- per-class verification -------------------------------------------------

bool passes_class(StructureClass cls, const UnaryStructure& u) {
  switch (cls) {
    case StructureClass::Semigroupoid:
      return check_associativity(u.table).pass();
    case StructureClass::LocalMeetSemilattice:
      return check_local_meet_semilattice(u.table).report.pass();
    case StructureClass::Ehresmann:
      return verify_structure(u, AxiomKind::TwoSidedEhresmann).pass();
    case StructureClass::Restriction:
      return verify_structure(u, AxiomKind::TwoSidedRestriction).pass();
    case StructureClass::Inverse: {
      if (!check_associativity(u.table).pass()) return false;
      InverseResult inv = check_inverse(u.table);
      return inv.canonical.has_value() && inv.canonical->plus == u.plus &&
             inv.canonical->star == u.star &&
             verify_structure(u, AxiomKind::TwoSidedRestriction).pass();
    }
    default:
      throw std::logic_error("not a semigroupoid class");
  }
}

bool passes_class(StructureClass cls, const BiorderedCategory& bc) {
  switch (cls) {
    case StructureClass::Lbec:
      return check_lbec(bc).report.pass();
    case StructureClass::Lic:
      return bc.leq_l == bc.leq_r &&
             check_locally_inductive(bc.cat, bc.leq_l, LicGoal::Category).report.pass();
    case StructureClass::Lig:
      return bc.leq_l == bc.leq_r &&
             check_locally_inductive(bc.cat, bc.leq_l, LicGoal::Groupoid).report.pass();
    default:
      throw std::logic_error("not a category class");
  }
}

}  // namespace

std::string canonical_form(const UnaryStructure& u) {
  return minimal_form(u, u.size(), permute_unary);
}

std::string canonical_form(const BiorderedCategory& bc) {
  return minimal_form(bc, bc.cat.size(), permute_category);
}

std::string canonical_form(const EnumeratedStructure& e) {
  if (std::holds_alternative<UnaryStructure>(e)) {
    return canonical_form(std::get<UnaryStructure>(e));
  }
  return canonical_form(std::get<BiorderedCategory>(e));
}

std::vector<EnumeratedStructure> enumerate_structures(StructureClass cls, int n, bool dedup) {
  check_size_guard(cls, n);
  std::vector<EnumeratedStructure> out;
  std::set<std::string> seen;

  auto emit = [&](EnumeratedStructure&& e) {
    bool ok = std::holds_alternative<UnaryStructure>(e)
                  ? passes_class(cls, std::get<UnaryStructure>(e))
                  : passes_class(cls, std::get<BiorderedCategory>(e));
    if (!ok) throw std::logic_error("generator emitted a structure failing its class checker");
    if (dedup && !seen.insert(canonical_form(e)).second) return;
    out.push_back(std::move(e));
  };

  switch (cls) {
    case StructureClass::Semigroupoid:
      search_tables(n, false, [&](const TableSearch& ts) {
        PartialTable t = ts.to_table();
        if (!check_associativity(t).pass()) return;
        emit(UnaryStructure{std::move(t), std::nullopt, std::nullopt});
      });
      break;

    case StructureClass::LocalMeetSemilattice:
      search_tables(n, true, [&](const TableSearch& ts) {
        PartialTable t = ts.to_table();
        if (!check_local_meet_semilattice(t).report.pass()) return;
        emit(UnaryStructure{std::move(t), std::nullopt, std::nullopt});
      });
      break;

    case StructureClass::Ehresmann:
    case StructureClass::Restriction: {
      const AxiomKind kind = cls == StructureClass::Ehresmann ? AxiomKind::TwoSidedEhresmann
                                                              : AxiomKind::TwoSidedRestriction;
      search_tables(n, false, [&](const TableSearch& ts) {
        PartialTable t = ts.to_table();
        if (!check_associativity(t).pass()) return;
        std::vector<Id> plus(n), star(n);
        search_unary(t, false, plus, 0, [&]() {
          search_unary(t, true, star, 0, [&]() {
            UnaryStructure u{t, plus, star};
            if (verify_structure(u, kind).pass()) emit(std::move(u));
          });
        });
      });
      break;
    }

    case StructureClass::Inverse:
      search_tables(n, false, [&](const TableSearch& ts) {
        PartialTable t = ts.to_table();
        if (!check_associativity(t).pass()) return;
        InverseResult inv = check_inverse(t);
        if (!inv.canonical) return;
        emit(UnaryStructure{std::move(*inv.canonical)});
      });
      break;

    case StructureClass::Lbec: {
      std::vector<OrderRel> orders = all_partial_orders(n);
      search_categories(n, [&](const FiniteCategory& cat) {
        for (const OrderRel& l : orders) {
          for (const OrderRel& r : orders) {
            BiorderedCategory bc{cat, l, r};
            if (check_lbec(bc).report.pass()) emit(EnumeratedStructure{std::move(bc)});
          }
        }
      });
      break;
    }

    case StructureClass::Lic:
    case StructureClass::Lig: {
      const LicGoal goal = cls == StructureClass::Lic ? LicGoal::Category : LicGoal::Groupoid;
      std::vector<OrderRel> orders = all_partial_orders(n);
      search_categories(n, [&](const FiniteCategory& cat) {
        for (const OrderRel& o : orders) {
          if (check_locally_inductive(cat, o, goal).report.pass()) {
            emit(EnumeratedStructure{BiorderedCategory{cat, o, o}});
          }
        }
      });
      break;
    }
  }
  return out;
}

long long oracle_count(StructureClass cls, int n) {
  check_size_guard(cls, n);

  // Raw-space odometers, all filtering done by the checkers.
  auto count_tables = [n](auto accept) {
    const int cells = n * n;
    std::vector<int> digits(cells, -1);
    long long count = 0;
    while (true) {
      PartialTable t(n);
      for (int c = 0; c < cells; ++c) {
        if (digits[c] >= 0) t.set(c / n, c % n, digits[c]);
      }
      count += accept(t);
      int c = 0;
      for (; c < cells; ++c) {
        if (digits[c] + 1 < n) {
          ++digits[c];
          break;
        }
        digits[c] = -1;
      }
      if (c == cells) break;
    }
    return count;
  };

  auto count_unary_over = [n](const PartialTable& t, AxiomKind kind) {
    long long count = 0;
    std::vector<Id> plus(n, 0), star(n, 0);
    auto advance = [n](std::vector<Id>& v) {
      for (int i = 0; i < n; ++i) {
        if (++v[i] < n) return true;
        v[i] = 0;
      }
      return false;
    };
    if (n == 0) return verify_structure({t, plus, star}, kind).pass() ? 1LL : 0LL;
    do {
      std::fill(star.begin(), star.end(), 0);
      do {
        if (verify_structure({t, plus, star}, kind).pass()) ++count;
      } while (advance(star));
    } while (advance(plus));
    return count;
  };

  switch (cls) {
    case StructureClass::Semigroupoid:
      return count_tables([](const PartialTable& t) {
        return check_associativity(t).pass() ? 1 : 0;
      });
    case StructureClass::LocalMeetSemilattice:
      if (n <= 3) {
        return count_tables([](const PartialTable& t) {
          return check_local_meet_semilattice(t).report.pass() ? 1 : 0;
        });
      } else {
        // The full raw space is out of reach at n = 4; any candidate outside
        // the symmetric/idempotent-diagonal subspace fails the axioms anyway.
        long long count = 0;
        std::vector<std::pair<Id, Id>> upper;
        for (Id i = 0; i < n; ++i) {
          for (Id j = i + 1; j < n; ++j) upper.emplace_back(i, j);
        }
        std::vector<int> digits(upper.size(), -1);
        while (true) {
          PartialTable t(n);
          for (Id i = 0; i < n; ++i) t.set(i, i, i);
          for (std::size_t c = 0; c < upper.size(); ++c) {
            if (digits[c] >= 0) {
              t.set(upper[c].first, upper[c].second, digits[c]);
              t.set(upper[c].second, upper[c].first, digits[c]);
            }
          }
          if (check_local_meet_semilattice(t).report.pass()) ++count;
          std::size_t c = 0;
          for (; c < upper.size(); ++c) {
            if (digits[c] + 1 < n) {
              ++digits[c];
              break;
            }
            digits[c] = -1;
          }
          if (c == upper.size()) break;
        }
        return count;
      }
    case StructureClass::Ehresmann:
      return count_tables([&](const PartialTable& t) {
        if (!check_associativity(t).pass()) return 0LL;
        return count_unary_over(t, AxiomKind::TwoSidedEhresmann);
      });
    case StructureClass::Restriction:
      return count_tables([&](const PartialTable& t) {
        if (!check_associativity(t).pass()) return 0LL;
        return count_unary_over(t, AxiomKind::TwoSidedRestriction);
      });
    case StructureClass::Inverse:
      return count_tables([](const PartialTable& t) {
        if (!check_associativity(t).pass()) return 0;
        return check_inverse(t).inverse.has_value() ? 1 : 0;
      });
    case StructureClass::Lbec:
    case StructureClass::Lic:
    case StructureClass::Lig: {
      long long count = 0;
      std::vector<OrderRel> orders = all_partial_orders(n);
      // Raw category space: object subset, dom/ran into the objects,
      // composition values over the induced definedness pattern.
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<Id> objects;
        for (Id e = 0; e < n; ++e) {
          if (mask >> e & 1) objects.push_back(e);
        }
        if (objects.empty() && n > 0) continue;
        const int k = static_cast<int>(objects.size());

        std::vector<int> dr(2 * n, 0);
        while (true) {
          std::vector<Id> dom(n), ran(n);
          for (Id x = 0; x < n; ++x) {
            dom[x] = objects[dr[x]];
            ran[x] = objects[dr[n + x]];
          }
          std::vector<std::pair<Id, Id>> cells;
          for (Id x = 0; x < n; ++x) {
            for (Id y = 0; y < n; ++y) {
              if (dom[x] == ran[y]) cells.emplace_back(x, y);
            }
          }
          std::vector<int> cv(cells.size(), 0);
          while (true) {
            FiniteCategory cat;
            cat.comp = PartialTable(n);
            for (std::size_t c = 0; c < cells.size(); ++c) {
              cat.comp.set(cells[c].first, cells[c].second, cv[c]);
            }
            cat.objects = objects;
            cat.dom = dom;
            cat.ran = ran;
            if (check_category(cat).pass()) {
              if (cls == StructureClass::Lbec) {
                for (const OrderRel& l : orders) {
                  for (const OrderRel& r : orders) {
                    if (check_lbec({cat, l, r}).report.pass()) ++count;
                  }
                }
              } else {
                const LicGoal goal =
                    cls == StructureClass::Lic ? LicGoal::Category : LicGoal::Groupoid;
                for (const OrderRel& o : orders) {
                  if (check_locally_inductive(cat, o, goal).report.pass()) ++count;
                }
              }
            }
            std::size_t c = 0;
            for (; c < cells.size(); ++c) {
              if (++cv[c] < n) break;
              cv[c] = 0;
            }
            if (c == cells.size()) break;
          }
          int i = 0;
          for (; i < 2 * n; ++i) {
            if (++dr[i] < k) break;
            dr[i] = 0;
          }
          if (i == 2 * n) break;
        }
        if (n == 0) break;
      }
      return count;
    }
  }
  throw std::logic_error("unhandled class");
}

}  // namespace sgpd
