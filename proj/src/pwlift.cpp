#include "qcoh/pwlift.hpp"

#include <functional>

#include "qcoh/errors.hpp"

namespace qcoh {

PWLifter::PWLifter(const RootSystem& rs, ParabolicSubset delta_P)
    : rs_(rs), delta_P_(std::move(delta_P)) {
  const int p = delta_P_.size();
  if (p >= rs.rank()) throw InvalidInput("parabolic subset must be proper");
  if (p >= 16) throw InvalidInput("parabolic subset too large for subset tables");
  for (int i : delta_P_.indices)
    if (i < 0 || i >= rs.rank()) throw InvalidInput("parabolic index out of range");
  linalg::Matrix m(p, std::vector<mpq_class>(p));
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) m[a][b] = rs.cartan(delta_P_.indices[b], delta_P_.indices[a]);
  if (p > 0) {
    auto inv = linalg::inverse(m);
    if (!inv) throw InternalConsistency("Cartan submatrix is singular");
    inv_ = std::move(*inv);
  }
  for (int k = 0; k < rs.num_positive_roots(); ++k) {
    const IntVec& c = rs.positive_roots()[k].coeffs;
    bool inside = true;
    for (int j = 0; j < rs.rank(); ++j)
      if (c[j] != 0 && !delta_P_.contains(j)) inside = false;
    if (inside) parabolic_roots_.push_back(k);
  }
  omega_P_ = weyl::longest_element(rs, delta_P_);
  for (int mask = 0; mask < (1 << p); ++mask) {
    std::vector<int> sub;
    for (int a = 0; a < p; ++a)
      if (mask >> a & 1) sub.push_back(delta_P_.indices[a]);
    omega_sub_.push_back(weyl::longest_element(rs, ParabolicSubset(sub)));
  }
}

bool PWLifter::pairs_into_zero_minus_one(const IntVec& coroot) const {
  for (int k : parabolic_roots_) {
    int v = rs_.pairing(rs_.positive_roots()[k].coeffs, coroot);
    if (v != 0 && v != -1) return false;
  }
  return true;
}

PWLift PWLifter::lift(const IntVec& lambda) const {
  const int p = delta_P_.size();
  if (static_cast<int>(lambda.size()) != rs_.rank()) throw InvalidInput("lambda has the wrong length");
  IntVec base = lambda;
  for (int i : delta_P_.indices) base[i] = 0;
  std::vector<IntVec> found;
  // Each simple root of Delta_P pairs to 0 or -1; solve for the Delta_P coefficients.
  for (int eps = 0; eps < (1 << p); ++eps) {
    std::vector<mpq_class> rhs(p);
    for (int a = 0; a < p; ++a) {
      IntVec e(rs_.rank(), 0);
      e[delta_P_.indices[a]] = 1;
      rhs[a] = -(eps >> a & 1) - rs_.pairing(e, base);
    }
    IntVec cand = base;
    bool integral = true;
    for (int a = 0; a < p && integral; ++a) {
      mpq_class x = 0;
      for (int b = 0; b < p; ++b) x += inv_[a][b] * rhs[b];
      if (x.get_den() != 1) integral = false;
      else cand[delta_P_.indices[a]] = static_cast<int>(x.get_num().get_si());
    }
    if (integral && pairs_into_zero_minus_one(cand)) found.push_back(std::move(cand));
  }
  if (found.size() != 1)
    throw InternalConsistency("expected exactly one lift, found " + std::to_string(found.size()));

  PWLift out;
  out.lambda_B = Coroot{found[0]};
  int mask = 0;
  std::vector<int> prime;
  for (int a = 0; a < p; ++a) {
    IntVec e(rs_.rank(), 0);
    e[delta_P_.indices[a]] = 1;
    if (rs_.pairing(e, found[0]) == 0) {
      mask |= 1 << a;
      prime.push_back(delta_P_.indices[a]);
    }
  }
  out.delta_P_prime = ParabolicSubset(prime);
  out.omega_factor = weyl::multiply(rs_, omega_P_, omega_sub_[mask]);
  return out;
}

std::vector<IntVec> PWLifter::brute_force_lifts(const IntVec& lambda, int bound) const {
  std::vector<IntVec> out;
  IntVec cur = lambda;
  for (int i : delta_P_.indices) cur[i] = 0;
  std::function<void(int)> rec = [&](int a) {
    if (a == delta_P_.size()) {
      if (pairs_into_zero_minus_one(cur)) out.push_back(cur);
      return;
    }
    for (int x = -bound; x <= bound; ++x) {
      cur[delta_P_.indices[a]] = x;
      rec(a + 1);
    }
  };
  rec(0);
  return out;
}

PWLift pw_lift(const RootSystem& rs, const ParabolicSubset& delta_P, const IntVec& lambda_P) {
  return PWLifter(rs, delta_P).lift(lambda_P);
}

ParabolicRing::ParabolicRing(std::shared_ptr<const QuantumRing> ring, ParabolicSubset delta_P)
    : ring_(std::move(ring)), lifter_(ring_->roots(), delta_P) {
  const WeylGroup& g = ring_->group();
  const RootSystem& rs = ring_->roots();
  if (delta_P.size() == 0 || delta_P.size() >= rs.rank())
    throw InvalidInput("parabolic subset must be nonempty and proper");
  minimal_.resize(g.size());
  for (int w = 0; w < g.size(); ++w) {
    minimal_[w] = weyl::is_minimal_representative(g.element(w), delta_P);
    if (minimal_[w]) reps_.push_back(w);
  }
  q_degree_.assign(rs.rank(), 0);
  for (int j = 0; j < rs.rank(); ++j) {
    if (delta_P.contains(j)) continue;
    IntVec e(rs.rank(), 0);
    e[j] = 1;
    int d = 2;
    for (int k : lifter_.parabolic_roots()) d -= rs.pairing(rs.positive_roots()[k].coeffs, e);
    q_degree_[j] = d;
  }
}

std::pair<int, Multidegree> ParabolicRing::psi(int v, const Multidegree& lambda_P) const {
  if (!minimal_.at(v)) throw InvalidInput("psi is defined on minimal coset representatives only");
  PWLift l = lifter_.lift(lambda_P);
  const WeylGroup& g = ring_->group();
  return {g.multiply(v, g.index_of(l.omega_factor)), l.lambda_B.coeffs};
}

long ParabolicRing::structure_constant(int u, int v, int w, const Multidegree& lambda_P) const {
  auto [x, lambda_B] = psi(w, lambda_P);
  if (!is_nonnegative(lambda_B)) return 0;
  return ring_->structure_constant(u, v, x, lambda_B);
}

QClass ParabolicRing::product(int u, int v) const {
  if (!minimal_.at(u) || !minimal_.at(v))
    throw InvalidInput("parabolic product takes minimal coset representatives");
  const WeylGroup& g = ring_->group();
  const RootSystem& rs = ring_->roots();
  const int total = g.length(u) + g.length(v);
  std::vector<int> free;
  for (int j = 0; j < rs.rank(); ++j)
    if (!delta_P().contains(j)) free.push_back(j);

  QClass out;
  Multidegree lambda(rs.rank(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t a, int deg) {
    if (a == free.size()) {
      PWLift l = lifter_.lift(lambda);
      if (!is_nonnegative(l.lambda_B.coeffs)) return;
      const int omega = g.index_of(l.omega_factor);
      const QClass& full = ring_->product(u, v);
      for (int w : reps_) {
        if (g.length(w) != total - deg) continue;
        auto c = full.coefficient(BasisElement{g.multiply(w, omega), l.lambda_B.coeffs});
        out.add(BasisElement{w, lambda}, c);
      }
      return;
    }
    const int j = free[a];
    for (int k = 0; deg + k * q_degree_[j] <= total; ++k) {
      lambda[j] = k;
      rec(a + 1, deg + k * q_degree_[j]);
    }
    lambda[j] = 0;
  };
  rec(0, 0);
  return out;
}

QClass ParabolicRing::multiply(const QClass& a, const QClass& b) const {
  QClass out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) out.add_scaled(product(x.w, y.w), cx * cy, add_degrees(x.q, y.q));
  return out;
}

}  // namespace qcoh
