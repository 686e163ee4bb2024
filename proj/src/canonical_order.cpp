#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>

#include "qcoh/errors.hpp"
#include "qcoh/grading.hpp"

namespace qcoh {

ParabolicSubset OrderedParabolic::prefix(int j) const {
  return ParabolicSubset(std::vector<int>(order.begin(), order.begin() + j));
}

bool is_connected(const RootSystem& rs, const std::vector<int>& subset) {
  return connected_components(rs, subset).size() == 1;
}

std::vector<std::vector<int>> connected_components(const RootSystem& rs, const std::vector<int>& subset) {
  std::vector<std::vector<int>> out;
  std::set<int> left(subset.begin(), subset.end());
  while (!left.empty()) {
    std::vector<int> comp{*left.begin()};
    left.erase(left.begin());
    for (std::size_t h = 0; h < comp.size(); ++h)
      for (auto it = left.begin(); it != left.end();) {
        if (rs.adjacent(comp[h], *it)) {
          comp.push_back(*it);
          it = left.erase(it);
        } else {
          ++it;
        }
      }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_a_type(const RootSystem& rs, const std::vector<int>& subset) {
  if (!is_connected(rs, subset)) return false;
  for (int i : subset) {
    int degree = 0;
    for (int j : subset) {
      if (!rs.adjacent(i, j)) continue;
      if (rs.cartan(i, j) != -1 || rs.cartan(j, i) != -1) return false;
      ++degree;
    }
    if (degree > 2) return false;
  }
  return true;
}

OrderedParabolic OrderedParabolic::make(const RootSystem& rs, std::vector<int> order) {
  const int n = rs.rank();
  const int r = static_cast<int>(order.size());
  if (r == 0 || r >= n) throw InvalidInput("parabolic subset must be nonempty and proper");
  std::set<int> distinct;
  for (int i : order) {
    if (i < 0 || i >= n) throw InvalidInput("simple root index out of range in order");
    if (!distinct.insert(i).second) throw InvalidInput("order repeats a simple root");
  }
  if (!is_connected(rs, order)) throw InvalidInput("ordered parabolic subset must be connected");
  OrderedParabolic op;
  op.a_type = is_a_type(rs, order);
  op.sigma = op.a_type ? r : r - 1;
  for (int j = 2; j <= op.sigma; ++j) {
    const int cur = order[j - 1], prev = order[j - 2];
    if (rs.cartan(cur, prev) != -1 || rs.cartan(prev, cur) != -1)
      throw InvalidInput("order position " + std::to_string(j) + " is not joined to position " +
                         std::to_string(j - 1) + " by a simple bond");
    for (int k = 0; k + 2 < j; ++k)
      if (rs.adjacent(cur, order[k]))
        throw InvalidInput("order position " + std::to_string(j) + " is not an end node of the chain");
  }
  op.order = std::move(order);
  return op;
}

namespace {

using Labelling = std::vector<int>;  // beta_k -> 0-based simple index, -1 when absent

struct OrderCase {
  int id;
  std::function<std::vector<Labelling>(CartanType)> labellings;
  std::function<bool(int kappa, int r, int n)> holds;
};

Labelling from_bourbaki(std::initializer_list<int> one_based, int n) {
  Labelling l;
  for (int b : one_based) l.push_back(b <= n ? b - 1 : -1);
  return l;
}

// D-series labellings that fix beta_2 (D4) and permute the three arms.
std::vector<Labelling> d4_arm_permutations(Labelling base) {
  std::vector<Labelling> out;
  std::vector<int> arms{base[0], base[2], base[3]};
  std::vector<int> perm = arms;
  std::sort(perm.begin(), perm.end());
  out.push_back(base);
  do {
    Labelling l = base;
    l[0] = perm[0];
    l[2] = perm[1];
    l[3] = perm[2];
    if (l != base) out.push_back(l);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

const std::vector<OrderCase>& order_cases() {
  static const std::vector<OrderCase> cases = {
      {1,
       [](CartanType t) {
         std::vector<Labelling> out;
         if (t.series != 'A' && t.series != 'B' && t.series != 'C') return out;
         Labelling id(t.rank);
         for (int k = 0; k < t.rank; ++k) id[k] = k;
         out.push_back(id);
         if (t.series == 'A') out.emplace_back(id.rbegin(), id.rend());
         return out;
       },
       [](int kappa, int, int n) { return kappa <= n - 1; }},
      {2,
       [](CartanType t) {
         std::vector<Labelling> out;
         if (t.series != 'D') return out;
         Labelling id(t.rank);
         for (int k = 0; k < t.rank; ++k) id[k] = k;
         if (t.rank == 4) return d4_arm_permutations(id);
         out.push_back(id);
         std::swap(id[t.rank - 2], id[t.rank - 1]);
         out.push_back(id);
         return out;
       },
       [](int kappa, int r, int n) { return kappa <= n - 2 || (r >= 3 && kappa == n - 1); }},
      {3,
       [](CartanType t) {
         std::vector<Labelling> out;
         if (t.series != 'D') return out;
         const int n = t.rank;
         Labelling l(n);
         l[0] = n - 2;
         l[1] = n - 3;
         l[2] = n - 1;
         for (int k = 4; k <= n; ++k) l[k - 1] = n - k;
         if (n == 4) return d4_arm_permutations(l);
         out.push_back(l);
         std::swap(l[0], l[2]);
         out.push_back(l);
         return out;
       },
       [](int kappa, int r, int) { return kappa == r && r <= 3; }},
      {4,
       [](CartanType t) {
         return t.series == 'E' ? std::vector<Labelling>{from_bourbaki({8, 7, 6, 5, 4, 3, 1, 2}, t.rank)}
                                : std::vector<Labelling>{};
       },
       [](int kappa, int r, int) { return kappa <= 5 || (r >= 3 && kappa == 6) || (r >= 5 && kappa == 7); }},
      {5,
       [](CartanType t) {
         return t.series == 'E' ? std::vector<Labelling>{from_bourbaki({1, 3, 4, 2, 5, 6, 7, 8}, t.rank)}
                                : std::vector<Labelling>{};
       },
       [](int kappa, int r, int) { return kappa <= 3 || (r >= 3 && kappa == 4); }},
      {6,
       [](CartanType t) {
         return t.series == 'E' ? std::vector<Labelling>{from_bourbaki({1, 3, 4, 5, 6, 7, 8, 2}, t.rank)}
                                : std::vector<Labelling>{};
       },
       [](int kappa, int r, int) { return kappa == 4 && r == 4; }},
      {7,
       [](CartanType t) {
         return t.series == 'E' ? std::vector<Labelling>{from_bourbaki({8, 7, 6, 5, 4, 2, 3, 1}, t.rank)}
                                : std::vector<Labelling>{};
       },
       [](int kappa, int r, int) { return kappa == 6 && r >= 3; }},
      {8,
       [](CartanType t) {
         return t.series == 'E' ? std::vector<Labelling>{from_bourbaki({2, 4, 5, 6, 7, 8, 3, 1}, t.rank)}
                                : std::vector<Labelling>{};
       },
       [](int kappa, int, int) { return kappa == 2; }},
      {9,
       [](CartanType t) {
         return t.series == 'F' ? std::vector<Labelling>{{0, 1, 2, 3}} : std::vector<Labelling>{};
       },
       [](int kappa, int, int) { return kappa == 2; }},
      {10,
       [](CartanType t) {
         return t.series == 'F' ? std::vector<Labelling>{{3, 2, 1, 0}} : std::vector<Labelling>{};
       },
       [](int kappa, int, int) { return kappa == 2; }},
  };
  return cases;
}

// First window beta_{o+1..o+r} of the case equal to delta_P whose first `scored` roots satisfy the case condition.
std::optional<std::vector<int>> match_case(const OrderCase& c, CartanType t, const ParabolicSubset& delta_P,
                                           int scored, const RootSystem& rs) {
  const int r = delta_P.size();
  for (const Labelling& l : c.labellings(t)) {
    for (int o = 0; o + r <= static_cast<int>(l.size()); ++o) {
      std::vector<int> window(l.begin() + o, l.begin() + o + r);
      if (std::find(window.begin(), window.end(), -1) != window.end()) continue;
      if (ParabolicSubset(window) != delta_P) continue;
      if (!c.holds(o + scored, scored, t.rank)) continue;
      try {
        OrderedParabolic::make(rs, window);
      } catch (const InvalidInput&) {
        continue;
      }
      return window;
    }
  }
  return std::nullopt;
}

}  // namespace

OrderedParabolic canonical_order(const RootSystem& rs, const ParabolicSubset& delta_P) {
  if (!rs.type()) throw InvalidInput("canonical order needs a named root system");
  const CartanType t = *rs.type();
  const int r = delta_P.size();
  if (r == 0 || r >= rs.rank()) throw InvalidInput("parabolic subset must be nonempty and proper");
  if (!is_connected(rs, delta_P.indices)) throw InvalidInput("parabolic subset must be connected");
  if (r == 1) return OrderedParabolic::make(rs, delta_P.indices);

  const bool a_type = is_a_type(rs, delta_P.indices);
  if (!a_type && r == 2) {
    // Only a double bond remains: B/C use (alpha_{n-1}, alpha_n), F4 uses (alpha_3, alpha_2).
    if ((t.series == 'B' || t.series == 'C') && delta_P.indices == std::vector<int>{t.rank - 2, t.rank - 1})
      return OrderedParabolic::make(rs, {t.rank - 2, t.rank - 1});
    if (t.series == 'F' && delta_P.indices == std::vector<int>{1, 2}) return OrderedParabolic::make(rs, {2, 1});
    throw InvalidInput("no canonical order for this parabolic subset");
  }
  const int scored = a_type ? r : r - 1;
  const auto& cases = order_cases();
  for (std::size_t k = 0; k < cases.size(); ++k) {
    auto found = match_case(cases[k], t, delta_P, scored, rs);
    if (!found) continue;
    if (cases[k].id == 5)
      if (auto c7 = match_case(cases[6], t, delta_P, scored, rs)) found = c7;
    return OrderedParabolic::make(rs, *found);
  }
  throw InvalidInput("no canonical order for this parabolic subset of " + t.str());
}

}  // namespace qcoh
