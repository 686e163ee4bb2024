#include "qcoh/weyl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "qcoh/errors.hpp"

namespace qcoh {

ParabolicSubset::ParabolicSubset(std::vector<int> idx) : indices(std::move(idx)) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
}

bool ParabolicSubset::contains(int i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

std::size_t IntVecHash::operator()(const IntVec& v) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int x : v) {
    h ^= static_cast<std::size_t>(static_cast<unsigned>(x));
    h *= 1099511628211ULL;
  }
  return h;
}

namespace weyl {
namespace {

int dim(const WeylElt& w) {
  int n = 0;
  while (n * n < static_cast<int>(w.action.size())) ++n;
  return n;
}

IntVec matmul(const IntVec& a, const IntVec& b, int n) {
  IntVec c(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int x = a[i * n + k];
      if (x == 0) continue;
      for (int j = 0; j < n; ++j) c[i * n + j] += x * b[k * n + j];
    }
  return c;
}

// Right descent: w(alpha_j^vee) is a negative coroot.
bool is_right_descent(const WeylElt& w, int j, int n) {
  for (int r = 0; r < n; ++r) {
    int c = w.action[r * n + j];
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

WeylElt identity(const RootSystem& rs) {
  const int n = rs.rank();
  WeylElt w{IntVec(n * n, 0), 0};
  for (int i = 0; i < n; ++i) w.action[i * n + i] = 1;
  return w;
}

WeylElt simple_reflection(const RootSystem& rs, int i) {
  const int n = rs.rank();
  if (i < 0 || i >= n) throw InvalidInput("simple reflection index out of range");
  WeylElt w = identity(rs);
  // s_i(alpha_c^vee) = alpha_c^vee - <alpha_i, alpha_c^vee> alpha_i^vee
  for (int c = 0; c < n; ++c) w.action[i * n + c] -= rs.cartan(c, i);
  w.length = 1;
  return w;
}

WeylElt reflection(const RootSystem& rs, const Root& gamma) {
  const int n = rs.rank();
  const IntVec gv = rs.coroot_of(gamma).coeffs;
  IntVec a(n * n, 0);
  for (int c = 0; c < n; ++c) {
    a[c * n + c] = 1;
    int p = 0;
    for (int j = 0; j < n; ++j) p += gamma.coeffs[j] * rs.cartan(c, j);
    for (int r = 0; r < n; ++r) a[r * n + c] -= p * gv[r];
  }
  return from_action(rs, std::move(a));
}

bool keeps_positive(const WeylElt& w, const IntVec& coroot) {
  const int n = static_cast<int>(coroot.size());
  for (int r = 0; r < n; ++r) {
    int s = 0;
    for (int c = 0; c < n; ++c) s += w.action[r * n + c] * coroot[c];
    if (s != 0) return s > 0;
  }
  throw InternalConsistency("Weyl element sent a coroot to zero");
}

WeylElt from_action(const RootSystem& rs, IntVec action) {
  WeylElt w{std::move(action), 0};
  for (const auto& c : rs.positive_coroots())
    if (!keeps_positive(w, c.coeffs)) ++w.length;
  return w;
}

WeylElt from_word(const RootSystem& rs, std::span<const int> word) {
  WeylElt w = identity(rs);
  for (int i : word) w = multiply(rs, w, simple_reflection(rs, i));
  return w;
}

WeylElt multiply(const RootSystem& rs, const WeylElt& a, const WeylElt& b) {
  return from_action(rs, matmul(a.action, b.action, rs.rank()));
}

WeylElt inverse(const RootSystem& rs, const WeylElt& w) {
  std::vector<int> word = reduced_word(rs, w);
  std::reverse(word.begin(), word.end());
  return from_word(rs, word);
}

IntVec apply(const WeylElt& w, const IntVec& coroot) {
  const int n = static_cast<int>(coroot.size());
  IntVec out(n, 0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out[r] += w.action[r * n + c] * coroot[c];
  return out;
}

std::vector<Root> inversion_set(const RootSystem& rs, const WeylElt& w) {
  std::vector<Root> out;
  for (int k = 0; k < rs.num_positive_roots(); ++k)
    if (!keeps_positive(w, rs.positive_coroots()[k].coeffs)) out.push_back(rs.positive_roots()[k]);
  return out;
}

std::vector<int> reduced_word(const RootSystem& rs, const WeylElt& w) {
  const int n = rs.rank();
  std::vector<int> word;
  WeylElt cur = w;
  while (cur.length > 0) {
    int j = 0;
    while (j < n && !is_right_descent(cur, j, n)) ++j;
    if (j == n) throw InternalConsistency("element of positive length without a descent");
    word.push_back(j);
    cur = multiply(rs, cur, simple_reflection(rs, j));
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<WeylElt> enumerate(const RootSystem& rs, const ParabolicSubset& sub, std::size_t cap) {
  std::vector<WeylElt> out{identity(rs)};
  std::unordered_map<IntVec, int, IntVecHash> seen{{out[0].action, 0}};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int i : sub.indices) {
      WeylElt next = multiply(rs, out[head], simple_reflection(rs, i));
      if (seen.count(next.action)) continue;
      if (out.size() >= cap)
        throw CapExceeded("Weyl group enumeration exceeds the cap of " + std::to_string(cap) +
                          " elements");
      seen.emplace(next.action, static_cast<int>(out.size()));
      out.push_back(std::move(next));
    }
  }
  return out;
}

bool is_minimal_representative(const WeylElt& w, const ParabolicSubset& sub) {
  const int n = dim(w);
  for (int j : sub.indices)
    if (is_right_descent(w, j, n)) return false;
  return true;
}

std::pair<WeylElt, WeylElt> parabolic_decompose(const RootSystem& rs, const WeylElt& w,
                                                const ParabolicSubset& sub) {
  const int n = rs.rank();
  WeylElt v = w;
  WeylElt u = identity(rs);
  for (;;) {
    auto it = std::find_if(sub.indices.begin(), sub.indices.end(),
                           [&](int j) { return is_right_descent(v, j, n); });
    if (it == sub.indices.end()) break;
    WeylElt s = simple_reflection(rs, *it);
    v = multiply(rs, v, s);
    u = multiply(rs, s, u);
  }
  if (v.length + u.length != w.length)
    throw InternalConsistency("parabolic decomposition lengths do not add up");
  return {std::move(v), std::move(u)};
}

WeylElt longest_element(const RootSystem& rs, const ParabolicSubset& sub) {
  const int n = rs.rank();
  WeylElt w = identity(rs);
  for (;;) {
    auto it = std::find_if(sub.indices.begin(), sub.indices.end(),
                           [&](int j) { return !is_right_descent(w, j, n); });
    if (it == sub.indices.end()) return w;
    w = multiply(rs, w, simple_reflection(rs, *it));
  }
}

std::vector<WeylElt> full_decomposition(const RootSystem& rs, const WeylElt& w,
                                        const std::vector<int>& order) {
  const int r = static_cast<int>(order.size());
  std::vector<WeylElt> parts(r + 1, identity(rs));
  WeylElt rest = w;
  // parts[j] receives v_{j+1}; the remainder in W_{P_1} is v_1.
  for (int j = r; j >= 1; --j) {
    ParabolicSubset prefix(std::vector<int>(order.begin(), order.begin() + j));
    auto [v, u] = parabolic_decompose(rs, rest, prefix);
    parts[j] = std::move(v);
    rest = std::move(u);
  }
  parts[0] = std::move(rest);
  return parts;
}

}  // namespace weyl

WeylGroup::WeylGroup(RootSystem rs, std::size_t cap) : rs_(std::move(rs)) {
  const int n = rs_.rank();
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::vector<WeylElt> found = weyl::enumerate(rs_, ParabolicSubset(all), cap);

  std::vector<std::pair<std::vector<int>, WeylElt>> keyed;
  keyed.reserve(found.size());
  for (auto& w : found) keyed.emplace_back(weyl::reduced_word(rs_, w), std::move(w));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.second.length != b.second.length) return a.second.length < b.second.length;
    return a.first < b.first;
  });
  for (auto& [word, w] : keyed) {
    lookup_.emplace(w.action, static_cast<int>(elems_.size()));
    words_.push_back(std::move(word));
    elems_.push_back(std::move(w));
  }
  by_length_.resize(elems_.back().length + 1);
  for (int i = 0; i < size(); ++i) by_length_[elems_[i].length].push_back(i);

  right_simple_.resize(static_cast<std::size_t>(size()) * n);
  std::vector<WeylElt> simples;
  for (int i = 0; i < n; ++i) simples.push_back(weyl::simple_reflection(rs_, i));
  for (int w = 0; w < size(); ++w)
    for (int i = 0; i < n; ++i)
      right_simple_[w * n + i] = index_of(weyl::multiply(rs_, elems_[w], simples[i]));

  const int nr = rs_.num_positive_roots();
  std::vector<WeylElt> refl;
  for (const auto& g : rs_.positive_roots()) refl.push_back(weyl::reflection(rs_, g));
  right_reflection_.resize(static_cast<std::size_t>(size()) * nr);
  for (int w = 0; w < size(); ++w)
    for (int k = 0; k < nr; ++k)
      right_reflection_[static_cast<std::size_t>(w) * nr + k] =
          index_of(weyl::multiply(rs_, elems_[w], refl[k]));
}

int WeylGroup::index_of(const WeylElt& w) const {
  auto it = lookup_.find(w.action);
  if (it == lookup_.end()) throw InternalConsistency("element missing from the Weyl group table");
  return it->second;
}

int WeylGroup::from_word(std::span<const int> word) const {
  int w = 0;
  for (int i : word) {
    if (i < 0 || i >= rank()) throw InvalidInput("simple reflection index out of range");
    w = times_simple(w, i);
  }
  return w;
}

int WeylGroup::multiply(int a, int b) const {
  int w = a;
  for (int i : words_[b]) w = times_simple(w, i);
  return w;
}

int WeylGroup::inverse(int idx) const {
  int w = 0;
  const auto& word = words_[idx];
  for (auto it = word.rbegin(); it != word.rend(); ++it) w = times_simple(w, *it);
  return w;
}

}  // namespace qcoh
