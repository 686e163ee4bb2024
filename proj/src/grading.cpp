#include "qcoh/grading.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "qcoh/errors.hpp"
#include "qcoh/pwlift.hpp"

namespace qcoh {

Grading Grading::unit(int dim, int j, int scale) {
  Grading g = zero(dim);
  g.v[j] = scale;
  return g;
}

int Grading::total() const { return std::accumulate(v.begin(), v.end(), 0); }

Grading& Grading::operator+=(const Grading& o) {
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
  return *this;
}

Grading& Grading::operator-=(const Grading& o) {
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= o.v[i];
  return *this;
}

Grading Grading::operator*(int k) const {
  Grading g = *this;
  for (int& x : g.v) x *= k;
  return g;
}

std::string to_string(const Grading& g) {
  std::string s = "(";
  for (int i = 0; i < g.dim(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
  return s + ")";
}

namespace {

int floor_div(int a, int b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }

std::vector<int> word_support_members(const WeylGroup& g, const ParabolicSubset& sub) {
  std::vector<int> out;
  for (int w = 0; w < g.size(); ++w) {
    const auto& word = g.word(w);
    if (std::all_of(word.begin(), word.end(), [&](int i) { return sub.contains(i); })) out.push_back(w);
  }
  return out;
}

}  // namespace

Grader::Grader(std::shared_ptr<const WeylGroup> group, OrderedParabolic op)
    : group_(std::move(group)), op_(std::move(op)) {
  const RootSystem& rs = group_->roots();
  const int n = rs.rank();
  const int r = op_.r();
  if (r == 0 || r >= n) throw InvalidInput("parabolic subset must be nonempty and proper");

  stage_.resize(rs.num_positive_roots());
  for (int k = 0; k < rs.num_positive_roots(); ++k) {
    const IntVec& c = rs.positive_roots()[k].coeffs;
    int s = r + 1;
    for (int j = 1; j <= r; ++j) {
      ParabolicSubset pre = op_.prefix(j);
      bool inside = true;
      for (int i = 0; i < n; ++i)
        if (c[i] != 0 && !pre.contains(i)) inside = false;
      if (inside) {
        s = j;
        break;
      }
    }
    stage_[k] = s;
  }

  table_.reserve(group_->size());
  for (int w = 0; w < group_->size(); ++w) {
    Grading a = weyl_by_decomposition(group_->element(w));
    Grading b = weyl_by_inversions(group_->element(w));
    if (a != b)
      throw InternalConsistency("the two gradings of a Weyl element disagree: " + to_string(a) + " vs " +
                                to_string(b));
    table_.push_back(std::move(a));
  }

  q_.assign(n, Grading::zero(dim()));
  q_[op_.order[0]] = Grading::unit(dim(), 0, 2);
  for (int j = 1; j <= r; ++j) {
    std::vector<int> targets;
    if (j < r) {
      targets.push_back(op_.order[j]);
    } else {
      for (int i = 0; i < n; ++i)
        if (!op_.subset().contains(i)) targets.push_back(i);
    }
    PWLifter lifter(rs, op_.prefix(j));
    for (int alpha : targets) {
      IntVec lambda(n, 0);
      lambda[alpha] = 1;
      PWLift l = lifter.lift(lambda);
      const int omega = group_->index_of(l.omega_factor);
      int asum = 0;
      Grading g = Grading::zero(dim());
      for (int i : op_.prefix(j).indices) {
        const int a = l.lambda_B.coeffs[i];
        asum += a;
        g -= q_[i] * a;
      }
      g += Grading::unit(dim(), j, group_->length(omega) + 2 + 2 * asum);
      g -= table_[omega];
      q_[alpha] = std::move(g);
    }
  }
}

Grading Grader::weyl_by_decomposition(const WeylElt& w) const {
  auto parts = weyl::full_decomposition(group_->roots(), w, op_.order);
  Grading g = Grading::zero(dim());
  for (int j = 0; j < dim(); ++j) g.v[j] = parts[j].length;
  return g;
}

Grading Grader::weyl_by_inversions(const WeylElt& w) const {
  const RootSystem& rs = group_->roots();
  Grading g = Grading::zero(dim());
  for (int k = 0; k < rs.num_positive_roots(); ++k)
    if (!weyl::keeps_positive(w, rs.positive_coroots()[k].coeffs)) ++g.v[stage_[k] - 1];
  return g;
}

Grading Grader::of(int w, const Multidegree& lambda) const {
  Grading g = table_[w];
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (lambda[i] != 0) g += q_[i] * lambda[i];
  return g;
}

IntVec Grader::window(const Grading& g, int k, int m) {
  if (k < 1 || k > m || m > g.dim()) throw InvalidInput("grading window out of range");
  return IntVec(g.v.begin() + (k - 1), g.v.begin() + m);
}

int Grader::chain_element(int i, int b) const {
  std::vector<int> word;
  for (int k = i - b + 1; k <= i; ++k) word.push_back(op_.order[k - 1]);
  return group_->from_word(word);
}

BasisElement Grader::unique_basis_element(const IntVec& d) const {
  const int sigma = op_.sigma;
  if (static_cast<int>(d.size()) != sigma) throw InvalidInput("grading vector must have sigma coordinates");
  Grading cur = Grading::zero(dim());
  std::copy(d.begin(), d.end(), cur.v.begin());
  Multidegree lambda(group_->rank(), 0);
  std::vector<int> b(sigma + 1, 0);
  for (int i = sigma; i >= 1; --i) {
    const Grading& gq = q_[op_.order[i - 1]];
    for (int k = i; k < dim(); ++k)
      if (gq[k] != 0) throw InternalConsistency("gr(q_i) is not supported on the first i coordinates");
    const int m = gq[i - 1];
    if (m != i + 1) throw InternalConsistency("gr(q_i) has leading coefficient other than i+1");
    const int a = floor_div(cur[i - 1], m);
    cur -= gq * a;
    lambda[op_.order[i - 1]] = a;
    b[i] = cur[i - 1];
  }
  int w = 0;
  for (int i = sigma; i >= 1; --i) w = group_->multiply(w, chain_element(i, b[i]));
  BasisElement out{w, lambda};
  Grading check = of(w, lambda);
  if (!std::equal(d.begin(), d.end(), check.v.begin()) ||
      std::any_of(check.v.begin() + sigma, check.v.end(), [](int x) { return x != 0; }))
    throw InternalConsistency("reconstructed element has grading " + to_string(check));
  return out;
}

BasisElement Grader::realize(const Grading& x) const {
  if (x.dim() != dim() || std::any_of(x.v.begin(), x.v.end(), [](int c) { return c < 0; }))
    throw InvalidInput("realize expects a nonnegative vector of the grading dimension");
  const RootSystem& rs = group_->roots();
  const int r = op_.r();
  Grading cur = x;
  Multidegree lambda(rs.rank(), 0);
  int w = 0;
  for (int t = r + 1; t > op_.sigma; --t) {
    std::vector<int> candidates;
    if (t == r + 1) {
      for (int i = 0; i < rs.rank(); ++i)
        if (!op_.subset().contains(i)) candidates.push_back(i);
    } else {
      candidates.push_back(op_.order[t - 1]);
    }
    // Minimal representatives of W_{P_t} / W_{P_{t-1}}, bucketed by length.
    ParabolicSubset upper = t == r + 1 ? ParabolicSubset([&] {
      std::vector<int> all(rs.rank());
      std::iota(all.begin(), all.end(), 0);
      return all;
    }()) : op_.prefix(t);
    ParabolicSubset lower = op_.prefix(t - 1);
    std::vector<int> rep_of_length;
    for (int v : word_support_members(*group_, upper)) {
      if (!weyl::is_minimal_representative(group_->element(v), lower)) continue;
      const int l = group_->length(v);
      if (static_cast<int>(rep_of_length.size()) <= l) rep_of_length.resize(l + 1, -1);
      if (rep_of_length[l] < 0) rep_of_length[l] = v;
    }
    int chosen = -1;
    for (int alpha : candidates) {
      const Grading& gq = q_[alpha];
      bool ok = gq[t - 1] > 0 && gq[t - 1] - 1 < static_cast<int>(rep_of_length.size());
      for (int k = 0; k < dim() && ok; ++k)
        if ((k < t - 1 && gq[k] > 0) || (k >= t && gq[k] != 0)) ok = false;
      if (ok) {
        chosen = alpha;
        break;
      }
    }
    if (chosen < 0) throw InternalConsistency("no simple coroot realizes stage " + std::to_string(t));
    const Grading& gq = q_[chosen];
    const int a = cur[t - 1] / gq[t - 1];
    const int b = cur[t - 1] % gq[t - 1];
    cur -= gq * a;
    cur.v[t - 1] -= b;
    lambda[chosen] += a;
    if (rep_of_length[b] < 0) throw InternalConsistency("missing coset representative of length " + std::to_string(b));
    w = group_->multiply(w, rep_of_length[b]);
  }
  BasisElement base = unique_basis_element(IntVec(cur.v.begin(), cur.v.begin() + op_.sigma));
  w = group_->multiply(w, base.w);
  lambda = add_degrees(lambda, base.q);
  if (of(w, lambda) != x || !is_nonnegative(lambda))
    throw InternalConsistency("realized element has the wrong grading");
  return BasisElement{w, lambda};
}

ReducibleGrader::ReducibleGrader(std::shared_ptr<const WeylGroup> group, std::vector<OrderedParabolic> comps)
    : group_(std::move(group)), comps_(std::move(comps)) {
  const RootSystem& rs = group_->roots();
  const int n = rs.rank();
  std::vector<int> all;
  bool seen_non_a = false;
  for (const auto& c : comps_) {
    if (seen_non_a) throw InvalidInput("components of non-A type must come last");
    if (!c.a_type) seen_non_a = true;
    offset_.push_back(dim_);
    dim_ += c.r();
    all.insert(all.end(), c.order.begin(), c.order.end());
  }
  for (std::size_t a = 0; a < comps_.size(); ++a)
    for (std::size_t b = a + 1; b < comps_.size(); ++b)
      for (int i : comps_[a].order)
        for (int j : comps_[b].order)
          if (i == j || rs.adjacent(i, j)) throw InvalidInput("components must be disjoint and non-adjacent");
  ParabolicSubset delta_P(all);
  if (delta_P.size() == 0 || delta_P.size() >= n) throw InvalidInput("parabolic subset must be nonempty and proper");
  const int last = dim_;
  dim_ += 1;

  std::vector<Grader> graders;
  for (const auto& c : comps_) graders.emplace_back(group_, c);

  for (int w = 0; w < group_->size(); ++w) {
    auto [v, u] = weyl::parabolic_decompose(rs, group_->element(w), delta_P);
    Grading g = Grading::zero(dim_);
    g.v[last] = v.length;
    for (std::size_t k = 0; k < comps_.size(); ++k) {
      std::vector<int> others;
      for (int i : delta_P.indices)
        if (!comps_[k].subset().contains(i)) others.push_back(i);
      auto [uk, rest] = weyl::parabolic_decompose(rs, u, ParabolicSubset(others));
      const Grading& gk = graders[k].weyl(group_->index_of(uk));
      if (gk[comps_[k].r()] != 0) throw InternalConsistency("component factor left its component");
      for (int j = 0; j < comps_[k].r(); ++j) g.v[offset_[k] + j] = gk[j];
    }
    table_.push_back(std::move(g));
  }

  q_.assign(n, Grading::zero(dim_));
  for (std::size_t k = 0; k < comps_.size(); ++k)
    for (int i : comps_[k].order)
      for (int j = 0; j < comps_[k].r(); ++j) q_[i].v[offset_[k] + j] = graders[k].q(i)[j];
  PWLifter lifter(rs, delta_P);
  for (int alpha = 0; alpha < n; ++alpha) {
    if (delta_P.contains(alpha)) continue;
    IntVec lambda(n, 0);
    lambda[alpha] = 1;
    PWLift l = lifter.lift(lambda);
    const int omega = group_->index_of(l.omega_factor);
    int asum = 0;
    Grading g = Grading::zero(dim_);
    for (int i : delta_P.indices) {
      asum += l.lambda_B.coeffs[i];
      g -= q_[i] * l.lambda_B.coeffs[i];
    }
    g += Grading::unit(dim_, last, group_->length(omega) + 2 + 2 * asum);
    g -= table_[omega];
    q_[alpha] = std::move(g);
  }
}

ReducibleGrader ReducibleGrader::canonical(std::shared_ptr<const WeylGroup> group, const ParabolicSubset& delta_P) {
  const RootSystem& rs = group->roots();
  std::vector<OrderedParabolic> comps;
  for (const auto& c : connected_components(rs, delta_P.indices)) comps.push_back(canonical_order(rs, ParabolicSubset(c)));
  std::stable_sort(comps.begin(), comps.end(),
                   [](const OrderedParabolic& a, const OrderedParabolic& b) { return a.a_type && !b.a_type; });
  return ReducibleGrader(std::move(group), std::move(comps));
}

Grading ReducibleGrader::of(int w, const Multidegree& lambda) const {
  Grading g = table_[w];
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (lambda[i] != 0) g += q_[i] * lambda[i];
  return g;
}

GradingTable grading_table(const Grader& gr, int row_min, int row_max, int col_min, int col_max,
                           std::size_t element_cap) {
  if (row_min > row_max || col_min > col_max) return {};
  const WeylGroup& g = gr.group();
  const int r = gr.ordered().r();
  const int n = g.rank();
  GradingTable t;
  // Rows: every vector of the first r coordinates in the box, descending.
  IntVec cur(r, row_max);
  for (;;) {
    t.rows.push_back(cur);
    int k = r - 1;
    while (k >= 0 && cur[k] == row_min) cur[k--] = row_max;
    if (k < 0) break;
    --cur[k];
  }
  for (int c = col_min; c <= col_max; ++c) t.cols.push_back(c);
  if (t.rows.size() * t.cols.size() > element_cap) throw CapExceeded("grading table box is too large");
  t.cells.assign(t.rows.size(), std::vector<std::vector<BasisElement>>(t.cols.size()));

  // The coordinates sum to l(w) + 2|lambda|, which bounds the search.
  const int max_total = r * row_max + col_max;
  if (max_total < 0) return t;
  std::size_t visited = 0;
  Multidegree lambda(n, 0);
  std::function<void(int, int)> rec = [&](int i, int budget) {
    if (i == n) {
      for (int w = 0; w < g.size(); ++w) {
        if (g.length(w) > budget) break;
        if (++visited > element_cap) throw CapExceeded("grading table search exceeds the element cap");
        Grading x = gr.of(w, lambda);
        const int col = x[r];
        if (col < col_min || col > col_max) continue;
        bool inside = true;
        for (int k = 0; k < r; ++k)
          if (x[k] < row_min || x[k] > row_max) inside = false;
        if (!inside) continue;
        std::size_t row = 0;
        for (int k = 0; k < r; ++k) row = row * (row_max - row_min + 1) + (row_max - x[k]);
        t.cells[row][col - col_min].push_back(BasisElement{w, lambda});
      }
      return;
    }
    for (int k = 0; 2 * k <= budget; ++k) {
      lambda[i] = k;
      rec(i + 1, budget - 2 * k);
    }
    lambda[i] = 0;
  };
  rec(0, max_total);
  return t;
}

}  // namespace qcoh
