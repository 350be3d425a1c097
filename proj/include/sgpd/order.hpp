#ifndef SGPD_ORDER_HPP
#define SGPD_ORDER_HPP

#include <vector>

#include "sgpd/report.hpp"

namespace sgpd {

// Boolean relation on {0, ..., n-1}; used for the natural partial orders.
class OrderRel {
 public:
  OrderRel() : n_(0) {}
  explicit OrderRel(int n) : n_(n), mat_(static_cast<std::size_t>(n) * n, 0) {}

  static OrderRel discrete(int n);

  int size() const { return n_; }
  bool leq(Id i, Id j) const { return mat_[index(i, j)] != 0; }
  void set(Id i, Id j, bool v = true) { mat_[index(i, j)] = v ? 1 : 0; }

  void close_reflexively();

  // Relation composition: (i,j) in R.compose(S) iff some k has (i,k) in R and (k,j) in S.
  OrderRel compose(const OrderRel& other) const;

  // Sub-relation induced on `subset` (ids reindexed by position).
  OrderRel restrict_to(const std::vector<Id>& subset) const;

  OrderRel permute(const std::vector<Id>& pi) const;

  std::vector<std::pair<Id, Id>> pairs() const;

  bool operator==(const OrderRel& o) const { return n_ == o.n_ && mat_ == o.mat_; }
  bool operator!=(const OrderRel& o) const { return !(*this == o); }

 private:
  std::size_t index(Id i, Id j) const;

  int n_;
  std::vector<char> mat_;
};

// Partial-order laws; violation tags "reflexive", "antisymmetric", "transitive".
Report check_partial_order(const OrderRel& r);

}  // namespace sgpd

#endif
