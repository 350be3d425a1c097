#include "sgpd/examples.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace sgpd {

namespace {

int compose_relations(int a, int b, int x) {
  int out = 0;
  for (int i = 0; i < x; ++i) {
    for (int j = 0; j < x; ++j) {
      for (int k = 0; k < x; ++k) {
        if ((a >> (i * x + k) & 1) && (b >> (k * x + j) & 1)) out |= 1 << (i * x + j);
      }
    }
  }
  return out;
}

std::string relation_label(int m, int x) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int i = 0; i < x; ++i) {
    for (int j = 0; j < x; ++j) {
      if (!(m >> (i * x + j) & 1)) continue;
      if (!first) os << ",";
      os << "(" << i << "," << j << ")";
      first = false;
    }
  }
  os << "}";
  return os.str();
}

}  // namespace

UnaryStructure relation_semigroup(int x_size) {
  if (x_size < 1 || x_size > 2) {
    throw SizeError("relation semigroup supports x_size 1 or 2 (2^(x^2) elements)");
  }
  const int x = x_size;
  const int n = 1 << (x * x);

  UnaryStructure u;
  u.table = PartialTable(n);
  std::vector<Id> plus(n), star(n);
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = relation_label(a, x);
    int p = 0, q = 0;
    for (int i = 0; i < x; ++i) {
      for (int j = 0; j < x; ++j) {
        if (a >> (i * x + j) & 1) {
          p |= 1 << (i * x + i);
          q |= 1 << (j * x + j);
        }
      }
    }
    plus[a] = p;
    star[a] = q;
    for (int b = 0; b < n; ++b) u.table.set(a, b, compose_relations(a, b, x));
  }
  u.table.set_labels(std::move(labels));
  u.plus = std::move(plus);
  u.star = std::move(star);
  return u;
}

UnaryStructure chain_semilattice(int n) {
  if (n < 0) throw InputError("chain length must be nonnegative");
  UnaryStructure u;
  u.table = PartialTable(n);
  std::vector<Id> id(n);
  for (Id i = 0; i < n; ++i) {
    id[i] = i;
    for (Id j = 0; j < n; ++j) u.table.set(i, j, std::min(i, j));
  }
  u.plus = id;
  u.star = id;
  return u;
}

UnaryStructure cyclic_group_z2() {
  UnaryStructure u;
  u.table = PartialTable(2);
  u.table.set(0, 0, 0);
  u.table.set(0, 1, 1);
  u.table.set(1, 0, 1);
  u.table.set(1, 1, 0);
  u.table.set_labels({"1", "g"});
  u.plus = std::vector<Id>{0, 0};
  u.star = std::vector<Id>{0, 0};
  return u;
}

}  // namespace sgpd
