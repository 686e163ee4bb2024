#include "qcoh/qchev.hpp"

#include <exception>
#include <numeric>
#include <string>

#include "qcoh/errors.hpp"
#include "qcoh/linalg.hpp"

namespace qcoh {

QuantumRing::QuantumRing(std::shared_ptr<const WeylGroup> group) : group_(std::move(group)) {
  const RootSystem& rs = roots();
  const int n = rs.rank();
  const int nw = size();
  chev_.resize(static_cast<std::size_t>(nw) * n);
  for (int u = 0; u < nw; ++u) {
    const int lu = group_->length(u);
    for (int k = 0; k < rs.num_positive_roots(); ++k) {
      const IntVec& cor = rs.positive_coroots()[k].coeffs;
      const int w = group_->times_reflection(u, k);
      const int lw = group_->length(w);
      const bool classical = lw == lu + 1;
      const bool quantum = lw == lu + 1 - RootSystem::two_rho_pairing(cor);
      if (!classical && !quantum) continue;
      for (int i = 0; i < n; ++i) {
        const int c = RootSystem::fundamental_pairing(i, cor);
        if (c != 0) chev_[static_cast<std::size_t>(u) * n + i].push_back({w, k, c, quantum});
      }
    }
  }
  row_once_ = std::make_unique<std::once_flag[]>(nw);
  rows_.resize(nw);
}

QuantumRing::~QuantumRing() = default;

QClass QuantumRing::chevalley_product(int u, int i) const {
  return times_divisor(QClass::basis(u, zero_degree()), i);
}

QClass QuantumRing::times_divisor(const QClass& x, int i) const {
  const RootSystem& rs = roots();
  QClass out;
  for (const auto& [b, c] : x) {
    for (const auto& t : chevalley_terms(b.w, i)) {
      Multidegree q = b.q;
      if (t.quantum) q = add_degrees(q, rs.positive_coroots()[t.root].coeffs);
      out.add(BasisElement{t.w, std::move(q)}, c * t.coeff);
    }
  }
  return out;
}

const QuantumRing::Expressions& QuantumRing::expressions() const {
  std::call_once(expr_once_, [this] { build_expressions(); });
  return *expr_;
}

const std::vector<int>& QuantumRing::classical_ranks() const { return expressions().ranks; }

void QuantumRing::build_expressions() const {
  const WeylGroup& g = *group_;
  const int n = roots().rank();
  auto e = std::make_unique<Expressions>();
  e->monomials.push_back({-1, -1});
  e->expr.resize(size());
  e->corrections.resize(size());
  e->expr[0] = {{0, mpq_class(1)}};
  e->ranks.push_back(1);

  // Classical class of each basis monomial, dense over the elements of its length.
  std::vector<std::vector<mpq_class>> dense{{mpq_class(1)}};
  std::vector<int> position(size(), 0);
  for (int l = 0; l <= g.max_length(); ++l)
    for (std::size_t k = 0; k < g.of_length(l).size(); ++k) position[g.of_length(l)[k]] = static_cast<int>(k);

  std::vector<int> prev_level{0};
  for (int d = 1; d <= g.max_length(); ++d) {
    const auto& level = g.of_length(d);
    const auto& below = g.of_length(d - 1);
    const int dim = static_cast<int>(level.size());
    linalg::EchelonBasis basis(dim);
    std::vector<int> chosen;
    for (int m : prev_level) {
      for (int i = 0; i < n && basis.rank() < dim; ++i) {
        std::vector<mpq_class> cls(dim, 0);
        for (std::size_t k = 0; k < below.size(); ++k) {
          if (sgn(dense[m][k]) == 0) continue;
          for (const auto& t : chevalley_terms(below[k], i))
            if (!t.quantum) cls[position[t.w]] += dense[m][k] * t.coeff;
        }
        if (!basis.insert(cls)) continue;
        chosen.push_back(static_cast<int>(e->monomials.size()));
        e->monomials.push_back({m, i});
        dense.push_back(std::move(cls));
      }
      if (basis.rank() == dim) break;
    }
    e->ranks.push_back(basis.rank());
    if (basis.rank() != dim)
      throw InternalConsistency("classical degree " + std::to_string(d) + " piece has rank " +
                                std::to_string(basis.rank()) + ", expected " + std::to_string(dim));
    linalg::Matrix b(dim, std::vector<mpq_class>(dim));
    for (int col = 0; col < dim; ++col)
      for (int row = 0; row < dim; ++row) b[row][col] = dense[chosen[col]][row];
    auto inv = linalg::inverse(b);
    if (!inv) throw InternalConsistency("classical monomial matrix is singular");
    for (int k = 0; k < dim; ++k) {
      auto& ex = e->expr[level[k]];
      for (int col = 0; col < dim; ++col)
        if (sgn((*inv)[col][k]) != 0) ex.emplace_back(chosen[col], (*inv)[col][k]);
    }
    prev_level = chosen;
  }
  expr_ = std::move(e);

  // Quantum corrections, read off from the row of the identity.
  std::vector<QClass> images = monomial_images(0);
  for (int v = 0; v < size(); ++v) {
    QClass corr;
    for (const auto& [m, c] : expr_->expr[v]) corr.add_scaled(images[m], c);
    corr.add(BasisElement{v, zero_degree()}, -1);
    for (const auto& [b, c] : corr)
      if (is_zero(b.q) || g.length(b.w) >= g.length(v))
        throw InternalConsistency("divisor expression of sigma^v has a non-quantum remainder");
    expr_->corrections[v] = std::move(corr);
  }
}

std::vector<QClass> QuantumRing::monomial_images(int u) const {
  const auto& mons = expr_->monomials;
  std::vector<QClass> images(mons.size());
  images[0] = QClass::basis(u, zero_degree());
  for (std::size_t m = 1; m < mons.size(); ++m) images[m] = times_divisor(images[mons[m].parent], mons[m].var);
  return images;
}

std::vector<QClass> QuantumRing::compute_row(int u) const {
  const Expressions& e = expressions();
  std::vector<QClass> images = monomial_images(u);
  std::vector<QClass> out(size());
  for (int v = 0; v < size(); ++v) {
    QClass acc;
    for (const auto& [m, c] : e.expr[v]) acc.add_scaled(images[m], c);
    for (const auto& [b, c] : e.corrections[v]) acc.add_scaled(out[b.w], -c, b.q);
    check_product(u, v, acc);
    out[v] = std::move(acc);
  }
  return out;
}

void QuantumRing::check_product(int u, int v, const QClass& p) const {
  const int total = group_->length(u) + group_->length(v);
  for (const auto& [b, c] : p) {
    if (c.get_den() != 1 || sgn(c) < 0 || !is_nonnegative(b.q) ||
        group_->length(b.w) + RootSystem::two_rho_pairing(b.q) != total)
      throw InternalConsistency("product of Schubert classes " + std::to_string(u) + " and " +
                                std::to_string(v) + " has a coefficient that is not a nonnegative integer "
                                "or a term of the wrong degree");
  }
}

const std::vector<QClass>& QuantumRing::row(int u) const {
  std::call_once(row_once_[u], [this, u] { rows_[u] = compute_row(u); });
  return rows_[u];
}

const QClass& QuantumRing::product(int u, int v) const {
  return u <= v ? row(u)[v] : row(v)[u];
}

QClass QuantumRing::multiply(const QClass& a, const QClass& b) const {
  QClass out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) out.add_scaled(product(x.w, y.w), cx * cy, add_degrees(x.q, y.q));
  return out;
}

long QuantumRing::structure_constant(int u, int v, int w, const Multidegree& lambda) const {
  return product(u, v).coefficient(BasisElement{w, lambda}).get_num().get_si();
}

void QuantumRing::warm(bool parallel) const {
  const int nw = size();
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int u = 0; u < nw; ++u) {
    try {
      row(u);
    } catch (...) {
#pragma omp critical(qcoh_warm)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

}  // namespace qcoh
