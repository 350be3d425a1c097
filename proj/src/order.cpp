#include "sgpd/order.hpp"

namespace sgpd {

std::size_t OrderRel::index(Id i, Id j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_) throw InputError("relation index out of range");
  return static_cast<std::size_t>(i) * n_ + j;
}

OrderRel OrderRel::discrete(int n) {
  OrderRel r(n);
  r.close_reflexively();
  return r;
}

void OrderRel::close_reflexively() {
  for (Id i = 0; i < n_; ++i) set(i, i);
}

OrderRel OrderRel::compose(const OrderRel& other) const {
  if (other.n_ != n_) throw InputError("relation size mismatch");
  OrderRel out(n_);
  for (Id i = 0; i < n_; ++i) {
    for (Id k = 0; k < n_; ++k) {
      if (!leq(i, k)) continue;
      for (Id j = 0; j < n_; ++j) {
        if (other.leq(k, j)) out.set(i, j);
      }
    }
  }
  return out;
}

OrderRel OrderRel::restrict_to(const std::vector<Id>& subset) const {
  OrderRel out(static_cast<int>(subset.size()));
  for (std::size_t a = 0; a < subset.size(); ++a) {
    for (std::size_t b = 0; b < subset.size(); ++b) {
      if (leq(subset[a], subset[b])) out.set(static_cast<Id>(a), static_cast<Id>(b));
    }
  }
  return out;
}

OrderRel OrderRel::permute(const std::vector<Id>& pi) const {
  OrderRel out(n_);
  for (Id i = 0; i < n_; ++i) {
    for (Id j = 0; j < n_; ++j) {
      if (leq(i, j)) out.set(pi[i], pi[j]);
    }
  }
  return out;
}

std::vector<std::pair<Id, Id>> OrderRel::pairs() const {
  std::vector<std::pair<Id, Id>> out;
  for (Id i = 0; i < n_; ++i) {
    for (Id j = 0; j < n_; ++j) {
      if (leq(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

Report check_partial_order(const OrderRel& r) {
  Report rep;
  const int n = r.size();
  for (Id i = 0; i < n; ++i) {
    if (!r.leq(i, i)) rep.add("reflexive", {i});
  }
  for (Id i = 0; i < n; ++i) {
    for (Id j = 0; j < n; ++j) {
      if (i != j && r.leq(i, j) && r.leq(j, i)) rep.add("antisymmetric", {i, j});
    }
  }
  for (Id i = 0; i < n; ++i) {
    for (Id j = 0; j < n; ++j) {
      if (!r.leq(i, j)) continue;
      for (Id k = 0; k < n; ++k) {
        if (r.leq(j, k) && !r.leq(i, k)) rep.add("transitive", {i, j, k});
      }
    }
  }
  return rep;
}

}  // namespace sgpd
