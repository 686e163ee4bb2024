#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qcoh/qclass.hpp"
#include "qcoh/weyl.hpp"

namespace qcoh {

// Element of Z^{r+1}, compared lexicographically. Coordinate j-1 holds the e_j component.
struct Grading {
  IntVec v;

  Grading() = default;
  explicit Grading(IntVec x) : v(std::move(x)) {}
  static Grading zero(int dim) { return Grading(IntVec(dim, 0)); }
  static Grading unit(int dim, int j, int scale = 1);

  int dim() const { return static_cast<int>(v.size()); }
  int operator[](int j) const { return v[j]; }
  int total() const;

  Grading& operator+=(const Grading& o);
  Grading& operator-=(const Grading& o);
  Grading operator*(int k) const;
  friend Grading operator+(Grading a, const Grading& b) { return a += b; }
  friend Grading operator-(Grading a, const Grading& b) { return a -= b; }
  auto operator<=>(const Grading&) const = default;
};

std::string to_string(const Grading& g);

// Ordered parabolic subset alpha_1, ..., alpha_r (0-based simple indices).
// The first sigma roots form a chain whose last root is an end node at every stage.
struct OrderedParabolic {
  std::vector<int> order;
  int sigma = 0;
  bool a_type = false;

  int r() const { return static_cast<int>(order.size()); }
  // Delta_j = {alpha_1, ..., alpha_j}; prefix(r) is Delta_P.
  ParabolicSubset prefix(int j) const;
  ParabolicSubset subset() const { return prefix(r()); }

  // Validates the chain conditions; throws InvalidInput with the offending position.
  static OrderedParabolic make(const RootSystem& rs, std::vector<int> order);
};

// Dynkin helpers on a subset of simple roots.
bool is_connected(const RootSystem& rs, const std::vector<int>& subset);
bool is_a_type(const RootSystem& rs, const std::vector<int>& subset);
std::vector<std::vector<int>> connected_components(const RootSystem& rs, const std::vector<int>& subset);

// Canonical order for a connected proper nonempty subset of a named root system.
OrderedParabolic canonical_order(const RootSystem& rs, const ParabolicSubset& delta_P);

// Z^{r+1}-grading of QH*(G/B) attached to an ordered parabolic subset.
class Grader {
 public:
  Grader(std::shared_ptr<const WeylGroup> group, OrderedParabolic op);

  const WeylGroup& group() const { return *group_; }
  const OrderedParabolic& ordered() const { return op_; }
  int dim() const { return op_.r() + 1; }

  // Tabulated gr(w), checked against both routes at construction.
  const Grading& weyl(int w) const { return table_[w]; }
  // Sum of lengths of the pieces of the full decomposition.
  Grading weyl_by_decomposition(const WeylElt& w) const;
  // Inversions counted by the first stage whose root subsystem contains them.
  Grading weyl_by_inversions(const WeylElt& w) const;

  // gr(q_{alpha_i^vee}) for the 0-based simple index i.
  const Grading& q(int i) const { return q_[i]; }
  // gr(q_lambda w); lambda may be negative.
  Grading of(int w, const Multidegree& lambda) const;
  Grading of(const BasisElement& b) const { return of(b.w, b.q); }
  // Coordinates k..m, 1-based and inclusive.
  static IntVec window(const Grading& g, int k, int m);

  // Stage (1..r+1) of the positive root with the given index.
  int root_stage(int root) const { return stage_[root]; }

  // Unique (w, lambda) in W_{P_sigma} x Q_sigma^vee with gr = d, for d in Z^sigma.
  BasisElement unique_basis_element(const IntVec& d) const;
  // u_b^{(i)} = s_{i-b+1} ... s_i in the order's numbering.
  int chain_element(int i, int b) const;
  // Some q_lambda w with lambda >= 0 and gr = x, for x in Z_{>=0}^{r+1}.
  BasisElement realize(const Grading& x) const;

 private:
  std::shared_ptr<const WeylGroup> group_;
  OrderedParabolic op_;
  std::vector<int> stage_;
  std::vector<Grading> q_;
  std::vector<Grading> table_;
};

// Grading for a parabolic subset with several components, one block per component plus a last coordinate.
class ReducibleGrader {
 public:
  ReducibleGrader(std::shared_ptr<const WeylGroup> group, std::vector<OrderedParabolic> components);
  // Components ordered with A-type first, each in its canonical order.
  static ReducibleGrader canonical(std::shared_ptr<const WeylGroup> group, const ParabolicSubset& delta_P);

  int dim() const { return dim_; }
  const std::vector<OrderedParabolic>& components() const { return comps_; }
  const Grading& weyl(int w) const { return table_[w]; }
  const Grading& q(int i) const { return q_[i]; }
  Grading of(int w, const Multidegree& lambda) const;

 private:
  std::shared_ptr<const WeylGroup> group_;
  std::vector<OrderedParabolic> comps_;
  std::vector<int> offset_;
  int dim_ = 0;
  std::vector<Grading> q_;
  std::vector<Grading> table_;
};

// Basis elements q_lambda w (lambda >= 0) laid out by grading: one row per value of the
// first r coordinates, one column per value of the last coordinate.
struct GradingTable {
  std::vector<IntVec> rows;  // descending
  std::vector<int> cols;     // ascending
  std::vector<std::vector<std::vector<BasisElement>>> cells;
};

GradingTable grading_table(const Grader& gr, int row_min, int row_max, int col_min, int col_max,
                           std::size_t element_cap = 2000000);

}  // namespace qcoh
