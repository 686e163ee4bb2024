#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qcoh/rootsys.hpp"

namespace qcoh {

inline constexpr std::size_t kDefaultWeylCap = 2000;

// Set of simple roots, stored sorted and 0-based.
struct ParabolicSubset {
  std::vector<int> indices;

  ParabolicSubset() = default;
  explicit ParabolicSubset(std::vector<int> idx);
  bool contains(int i) const;
  int size() const { return static_cast<int>(indices.size()); }
  bool operator==(const ParabolicSubset&) const = default;
};

// Weyl group element stored as its action on the coroot lattice.
// action[r * n + c] is the alpha_r^vee coefficient of w(alpha_c^vee).
struct WeylElt {
  IntVec action;
  int length = 0;

  bool operator==(const WeylElt& o) const { return action == o.action; }
};

struct IntVecHash {
  std::size_t operator()(const IntVec& v) const noexcept;
};

namespace weyl {

WeylElt identity(const RootSystem& rs);
WeylElt simple_reflection(const RootSystem& rs, int i);
WeylElt reflection(const RootSystem& rs, const Root& gamma);
// Computes the length by counting inversions.
WeylElt from_action(const RootSystem& rs, IntVec action);
// 0-based word, not necessarily reduced.
WeylElt from_word(const RootSystem& rs, std::span<const int> word);

WeylElt multiply(const RootSystem& rs, const WeylElt& a, const WeylElt& b);
WeylElt inverse(const RootSystem& rs, const WeylElt& w);
IntVec apply(const WeylElt& w, const IntVec& coroot);

// True when w maps the positive coroot to a positive coroot.
bool keeps_positive(const WeylElt& w, const IntVec& coroot);
std::vector<Root> inversion_set(const RootSystem& rs, const WeylElt& w);

// Greedy reduced word: repeatedly strip the smallest right descent. 0-based.
std::vector<int> reduced_word(const RootSystem& rs, const WeylElt& w);

// Elements of W_{P'} by breadth-first search. Throws CapExceeded beyond cap.
std::vector<WeylElt> enumerate(const RootSystem& rs, const ParabolicSubset& sub,
                               std::size_t cap = kDefaultWeylCap);

bool is_minimal_representative(const WeylElt& w, const ParabolicSubset& sub);
// w = v * u with v minimal in w W_{P'} and u in W_{P'}.
std::pair<WeylElt, WeylElt> parabolic_decompose(const RootSystem& rs, const WeylElt& w,
                                                const ParabolicSubset& sub);
WeylElt longest_element(const RootSystem& rs, const ParabolicSubset& sub);

// For an ordered list alpha_1..alpha_r returns v_1, ..., v_{r+1} with
// w = v_{r+1} * ... * v_1 and v_j minimal in its coset of W_{P_{j-1}} inside W_{P_j}.
std::vector<WeylElt> full_decomposition(const RootSystem& rs, const WeylElt& w,
                                        const std::vector<int>& order);

}  // namespace weyl

// Whole Weyl group with index-based lookup tables.
// Elements are sorted by length, then by reduced word; index 0 is the identity.
class WeylGroup {
 public:
  explicit WeylGroup(RootSystem rs, std::size_t cap = kDefaultWeylCap);

  const RootSystem& roots() const { return rs_; }
  int size() const { return static_cast<int>(elems_.size()); }
  int rank() const { return rs_.rank(); }
  const WeylElt& element(int idx) const { return elems_[idx]; }
  int length(int idx) const { return elems_[idx].length; }
  int max_length() const { return elems_.back().length; }
  const std::vector<int>& word(int idx) const { return words_[idx]; }

  // Throws InternalConsistency when w is not in the table.
  int index_of(const WeylElt& w) const;
  // Reduces an arbitrary 0-based word.
  int from_word(std::span<const int> word) const;
  int times_simple(int idx, int i) const { return right_simple_[idx * rank() + i]; }
  // idx * s_gamma for the positive root with the given index.
  int times_reflection(int idx, int root) const {
    return right_reflection_[static_cast<std::size_t>(idx) * rs_.num_positive_roots() + root];
  }
  int multiply(int a, int b) const;
  int inverse(int idx) const;
  const std::vector<int>& of_length(int l) const { return by_length_[l]; }

 private:
  RootSystem rs_;
  std::vector<WeylElt> elems_;
  std::vector<std::vector<int>> words_;
  std::unordered_map<IntVec, int, IntVecHash> lookup_;
  std::vector<int> right_simple_;
  std::vector<int> right_reflection_;
  std::vector<std::vector<int>> by_length_;
};

}  // namespace qcoh
