#ifndef SGPD_PARTIAL_TABLE_HPP
#define SGPD_PARTIAL_TABLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "sgpd/report.hpp"

namespace sgpd {

// Partial binary operation on {0, ..., n-1} stored as a flat n*n table.
// Absent entries are a distinct state, never a sentinel element id.
class PartialTable {
 public:
  PartialTable() : n_(0) {}
  explicit PartialTable(int n);

  int size() const { return n_; }
  bool defined(Id i, Id j) const { return cell(i, j) >= 0; }
  Id at(Id i, Id j) const;
  std::optional<Id> product(Id i, Id j) const;

  void set(Id i, Id j, Id k);
  void unset(Id i, Id j);

  bool total() const;
  std::size_t defined_count() const;

  // Display names, presentation-only; ignored by equality.
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  std::string label(Id i) const;

  bool operator==(const PartialTable& o) const { return n_ == o.n_ && cells_ == o.cells_; }
  bool operator!=(const PartialTable& o) const { return !(*this == o); }

 private:
  int cell(Id i, Id j) const;
  void check_index(Id i, Id j) const;

  int n_;
  std::vector<int> cells_;  // -1 encodes "absent"; the public API exposes optionals
  std::vector<std::string> labels_;
};

// Semigroupoid associativity: whenever one of the three hypotheses below holds,
// all four products st, tr, (st)r, s(tr) must be defined and the bracketings equal.
//   (s1) st and tr defined
//   (s2) st and (st)r defined
//   (s3) tr and s(tr) defined
// One violation per (hypothesis, triple).
Report check_associativity(const PartialTable& t);

// Sub-table induced on `subset` (ids reindexed by position); entries whose
// value escapes the subset become absent.  Used for projection-set analyses.
PartialTable restrict_to(const PartialTable& t, const std::vector<Id>& subset);

// Relabels along permutation pi: result[pi(i)][pi(j)] = pi(t[i][j]).
PartialTable permute(const PartialTable& t, const std::vector<Id>& pi);

}  // namespace sgpd

#endif
