#include "sgpd/partial_table.hpp"

#include <stdexcept>

namespace sgpd {

PartialTable::PartialTable(int n) : n_(n) {
  if (n < 0) throw InputError("table size must be nonnegative");
  cells_.assign(static_cast<std::size_t>(n) * n, -1);
}

int PartialTable::cell(Id i, Id j) const {
  check_index(i, j);
  return cells_[static_cast<std::size_t>(i) * n_ + j];
}

void PartialTable::check_index(Id i, Id j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_) throw InputError("table index out of range");
}

Id PartialTable::at(Id i, Id j) const {
  int v = cell(i, j);
  if (v < 0) throw std::logic_error("PartialTable::at on absent entry");
  return v;
}

std::optional<Id> PartialTable::product(Id i, Id j) const {
  int v = cell(i, j);
  if (v < 0) return std::nullopt;
  return v;
}

void PartialTable::set(Id i, Id j, Id k) {
  check_index(i, j);
  if (k < 0 || k >= n_) throw InputError("table value out of range");
  cells_[static_cast<std::size_t>(i) * n_ + j] = k;
}

void PartialTable::unset(Id i, Id j) {
  check_index(i, j);
  cells_[static_cast<std::size_t>(i) * n_ + j] = -1;
}

bool PartialTable::total() const {
  for (int v : cells_) {
    if (v < 0) return false;
  }
  return true;
}

std::size_t PartialTable::defined_count() const {
  std::size_t k = 0;
  for (int v : cells_) {
    if (v >= 0) ++k;
  }
  return k;
}

void PartialTable::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(n_)) {
    throw InputError("label count must match table size");
  }
  labels_ = std::move(labels);
}

std::string PartialTable::label(Id i) const {
  check_index(i, i);
  if (!labels_.empty() && !labels_[i].empty()) return labels_[i];
  return std::to_string(i);
}

Report check_associativity(const PartialTable& t) {
  Report rep;
  const int n = t.size();
  for (Id s = 0; s < n; ++s) {
    for (Id u = 0; u < n; ++u) {
      for (Id r = 0; r < n; ++r) {
        auto su = t.product(s, u);
        auto ur = t.product(u, r);
        std::optional<Id> left = su ? t.product(*su, r) : std::optional<Id>{};
        std::optional<Id> right = ur ? t.product(s, *ur) : std::optional<Id>{};

        bool h1 = su && ur;
        bool h2 = su && left;
        bool h3 = ur && right;
        if (!(h1 || h2 || h3)) continue;

        bool all_defined = su && ur && left && right;
        bool ok = all_defined && *left == *right;
        if (ok) continue;

        std::string note;
        if (!su) note = "st undefined";
        else if (!ur) note = "tr undefined";
        else if (!left) note = "(st)r undefined";
        else if (!right) note = "s(tr) undefined";
        else note = "(st)r != s(tr)";
        if (h1) rep.add("s1", {s, u, r}, note);
        if (h2) rep.add("s2", {s, u, r}, note);
        if (h3) rep.add("s3", {s, u, r}, note);
      }
    }
  }
  return rep;
}

PartialTable restrict_to(const PartialTable& t, const std::vector<Id>& subset) {
  const int k = static_cast<int>(subset.size());
  std::vector<int> pos(t.size(), -1);
  for (int a = 0; a < k; ++a) pos[subset[a]] = a;
  PartialTable out(k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      auto v = t.product(subset[a], subset[b]);
      if (v && pos[*v] >= 0) out.set(a, b, pos[*v]);
    }
  }
  return out;
}

PartialTable permute(const PartialTable& t, const std::vector<Id>& pi) {
  const int n = t.size();
  PartialTable out(n);
  for (Id i = 0; i < n; ++i) {
    for (Id j = 0; j < n; ++j) {
      auto v = t.product(i, j);
      if (v) out.set(pi[i], pi[j], pi[*v]);
    }
  }
  return out;
}

}  // namespace sgpd
