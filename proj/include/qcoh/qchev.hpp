#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "qcoh/qclass.hpp"
#include "qcoh/weyl.hpp"

namespace qcoh {

// One summand c * q_{gamma^vee}^{[quantum]} sigma^{w} of sigma^u * sigma^{s_i}.
struct ChevalleyTerm {
  int w = 0;
  int root = 0;  // index of gamma among the positive roots
  int coeff = 0;
  bool quantum = false;
};

// Small quantum cohomology ring of G/B over the Schubert basis of a WeylGroup.
class QuantumRing {
 public:
  explicit QuantumRing(std::shared_ptr<const WeylGroup> group);
  ~QuantumRing();

  const WeylGroup& group() const { return *group_; }
  const std::shared_ptr<const WeylGroup>& group_ptr() const { return group_; }
  const RootSystem& roots() const { return group_->roots(); }
  int size() const { return group_->size(); }
  Multidegree zero_degree() const { return Multidegree(roots().rank(), 0); }

  const std::vector<ChevalleyTerm>& chevalley_terms(int u, int i) const {
    return chev_[static_cast<std::size_t>(u) * roots().rank() + i];
  }
  // sigma^u * sigma^{s_i}
  QClass chevalley_product(int u, int i) const;
  // x * sigma^{s_i}
  QClass times_divisor(const QClass& x, int i) const;

  // sigma^u * sigma^v, memoized under the key (min(u, v), max(u, v)).
  const QClass& product(int u, int v) const;
  // Entry v of the row computed for u, without swapping the arguments.
  const QClass& product_ordered(int u, int v) const { return row(u)[v]; }
  QClass multiply(const QClass& a, const QClass& b) const;
  // Coefficient of q_lambda sigma^w in sigma^u * sigma^v.
  long structure_constant(int u, int v, int w, const Multidegree& lambda) const;
  // Products sigma^u * sigma^v for every v, recomputed from scratch.
  std::vector<QClass> compute_row(int u) const;
  // Fills the memo for every row.
  void warm(bool parallel) const;

  // Rank of each classical graded piece found while building the divisor expressions.
  const std::vector<int>& classical_ranks() const;

 private:
  struct Monomial {
    int parent;
    int var;
  };
  struct Expressions {
    std::vector<Monomial> monomials;  // monomial 0 is the empty product
    // sigma^v = sum c * m at q = 0
    std::vector<std::vector<std::pair<int, mpq_class>>> expr;
    // (sum c * m)(quantum) - sigma^v
    std::vector<QClass> corrections;
    std::vector<int> ranks;
  };

  const Expressions& expressions() const;
  void build_expressions() const;
  std::vector<QClass> monomial_images(int u) const;
  const std::vector<QClass>& row(int u) const;
  void check_product(int u, int v, const QClass& p) const;

  std::shared_ptr<const WeylGroup> group_;
  std::vector<std::vector<ChevalleyTerm>> chev_;

  mutable std::once_flag expr_once_;
  mutable std::unique_ptr<Expressions> expr_;
  mutable std::unique_ptr<std::once_flag[]> row_once_;
  mutable std::vector<std::vector<QClass>> rows_;
};

}  // namespace qcoh
