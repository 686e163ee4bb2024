#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace qcoh::linalg {

using Matrix = std::vector<std::vector<mpq_class>>;

// Exact inverse of a square rational matrix; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

// Exact solution of m x = b for square invertible m; nullopt when singular.
std::optional<std::vector<mpq_class>> solve(const Matrix& m, const std::vector<mpq_class>& b);

// Grows a row-echelon basis one vector at a time.
class EchelonBasis {
 public:
  explicit EchelonBasis(int dim) : dim_(dim) {}
  // Returns true and stores v when it is independent of the vectors seen so far.
  bool insert(std::vector<mpq_class> v);
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  int dim_;
  std::vector<std::vector<mpq_class>> rows_;
  std::vector<int> pivots_;
};

}  // namespace qcoh::linalg
