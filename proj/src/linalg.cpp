#include "qcoh/linalg.hpp"

#include <utility>

namespace qcoh::linalg {

std::optional<Matrix> inverse(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix a = m;
  Matrix inv(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(a[piv][col]) == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    mpq_class scale = 1 / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || sgn(a[i][col]) == 0) continue;
      mpq_class f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::optional<std::vector<mpq_class>> solve(const Matrix& m, const std::vector<mpq_class>& b) {
  auto inv = inverse(m);
  if (!inv) return std::nullopt;
  std::vector<mpq_class> x(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) x[i] += (*inv)[i][j] * b[j];
  return x;
}

bool EchelonBasis::insert(std::vector<mpq_class> v) {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const int p = pivots_[k];
    if (sgn(v[p]) == 0) continue;
    mpq_class f = v[p];
    for (int j = 0; j < dim_; ++j) v[j] -= f * rows_[k][j];
  }
  int p = 0;
  while (p < dim_ && sgn(v[p]) == 0) ++p;
  if (p == dim_) return false;
  mpq_class scale = 1 / v[p];
  for (auto& x : v) x *= scale;
  // Keep earlier rows reduced against the new pivot so elimination stays single-pass.
  for (auto& row : rows_) {
    if (sgn(row[p]) == 0) continue;
    mpq_class f = row[p];
    for (int j = 0; j < dim_; ++j) row[j] -= f * v[j];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

}  // namespace qcoh::linalg
