#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "qcoh/errors.hpp"
#include "qcoh/weyl.hpp"

using namespace qcoh;

TEST(Weyl, GroupOrders) {
  const std::pair<const char*, int> cases[] = {{"A1", 2},  {"A2", 6},   {"A3", 24},  {"A4", 120}, {"B2", 8},
                                               {"B3", 48}, {"C3", 48},  {"D4", 192}, {"G2", 12},  {"F4", 1152}};
  for (auto [id, n] : cases) EXPECT_EQ(WeylGroup(RootSystem::build(id)).size(), n) << id;
}

TEST(Weyl, CapRefusesE6) {
  EXPECT_THROW(WeylGroup(RootSystem::build("E6")), CapExceeded);
  EXPECT_THROW(WeylGroup(RootSystem::build("B3"), 40), CapExceeded);
}

TEST(Weyl, WordsRoundTripAndLengths) {
  for (const char* id : {"A3", "B3", "G2"}) {
    WeylGroup g(RootSystem::build(id));
    EXPECT_EQ(g.length(0), 0);
    EXPECT_EQ(g.max_length(), g.roots().num_positive_roots());
    for (int w = 0; w < g.size(); ++w) {
      EXPECT_EQ(g.from_word(g.word(w)), w);
      EXPECT_EQ(static_cast<int>(g.word(w).size()), g.length(w));
      EXPECT_EQ(static_cast<int>(weyl::inversion_set(g.roots(), g.element(w)).size()), g.length(w));
      EXPECT_EQ(g.multiply(w, g.inverse(w)), 0);
      EXPECT_EQ(g.length(g.inverse(w)), g.length(w));
    }
  }
}

// Inversion count of the permutation obtained from adjacent transpositions.
TEST(Weyl, LengthMatchesPermutationInversions) {
  WeylGroup g(RootSystem::build("A4"));
  for (int w = 0; w < g.size(); ++w) {
    std::vector<int> perm(5);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i : g.word(w)) std::swap(perm[i], perm[i + 1]);
    int inv = 0;
    for (int a = 0; a < 5; ++a)
      for (int b = a + 1; b < 5; ++b) inv += perm[a] > perm[b];
    EXPECT_EQ(inv, g.length(w));
  }
}

TEST(Weyl, MultiplicationAssociativeAndSimpleTables) {
  WeylGroup g(RootSystem::build("B3"));
  for (int a = 0; a < g.size(); a += 5)
    for (int b = 0; b < g.size(); b += 7)
      for (int c = 0; c < g.size(); c += 11)
        EXPECT_EQ(g.multiply(g.multiply(a, b), c), g.multiply(a, g.multiply(b, c)));
  for (int w = 0; w < g.size(); ++w)
    for (int i = 0; i < 3; ++i) {
      EXPECT_EQ(g.times_simple(w, i), g.multiply(w, g.from_word(std::vector<int>{i})));
      EXPECT_EQ(std::abs(g.length(g.times_simple(w, i)) - g.length(w)), 1);
    }
}

TEST(Weyl, ReflectionTable) {
  WeylGroup g(RootSystem::build("G2"));
  const RootSystem& rs = g.roots();
  for (int k = 0; k < rs.num_positive_roots(); ++k) {
    const int s = g.times_reflection(0, k);
    EXPECT_EQ(g.element(s), weyl::reflection(rs, rs.positive_roots()[k]));
    EXPECT_EQ(g.multiply(s, s), 0);
    EXPECT_EQ(g.length(s) % 2, 1);
  }
}

TEST(Weyl, NonReducedWordsCollapse) {
  WeylGroup g(RootSystem::build("A2"));
  EXPECT_EQ(g.from_word(std::vector<int>{0, 0}), 0);
  EXPECT_EQ(g.word(g.from_word(std::vector<int>{1, 0, 1})), g.word(g.from_word(std::vector<int>{0, 1, 0})));
}

TEST(Weyl, ParabolicDecomposition) {
  WeylGroup g(RootSystem::build("B3"));
  const RootSystem& rs = g.roots();
  const ParabolicSubset p({0, 1});
  int reps = 0;
  for (int w = 0; w < g.size(); ++w) {
    auto [v, u] = weyl::parabolic_decompose(rs, g.element(w), p);
    EXPECT_TRUE(weyl::is_minimal_representative(v, p));
    for (int i : weyl::reduced_word(rs, u)) EXPECT_TRUE(p.contains(i));
    EXPECT_EQ(v.length + u.length, g.length(w));
    EXPECT_EQ(weyl::multiply(rs, v, u), g.element(w));
    reps += weyl::is_minimal_representative(g.element(w), p);
  }
  EXPECT_EQ(reps, 48 / 6);
  EXPECT_EQ(weyl::longest_element(rs, p).length, 3);
  EXPECT_EQ(weyl::enumerate(rs, p).size(), 6u);
}

TEST(Weyl, FullDecompositionLengthsAdd) {
  WeylGroup g(RootSystem::build("A4"));
  const std::vector<int> order{0, 1, 2};
  for (int w = 0; w < g.size(); ++w) {
    auto parts = weyl::full_decomposition(g.roots(), g.element(w), order);
    ASSERT_EQ(parts.size(), 4u);
    int total = 0;
    WeylElt prod = weyl::identity(g.roots());
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
      total += it->length;
      prod = weyl::multiply(g.roots(), prod, *it);
    }
    EXPECT_EQ(total, g.length(w));
    EXPECT_EQ(prod, g.element(w));
  }
}

TEST(Weyl, OfLengthPartitionsGroup) {
  WeylGroup g(RootSystem::build("C3"));
  std::size_t n = 0;
  for (int l = 0; l <= g.max_length(); ++l) {
    for (int w : g.of_length(l)) EXPECT_EQ(g.length(w), l);
    n += g.of_length(l).size();
  }
  EXPECT_EQ(n, 48u);
}

TEST(Weyl, SmallExamples) {
  WeylGroup g(RootSystem::build("A2"));
  const RootSystem& rs = g.roots();
  const WeylElt s1 = weyl::simple_reflection(rs, 0), s2 = weyl::simple_reflection(rs, 1);
  EXPECT_EQ(weyl::multiply(rs, s1, s1), weyl::identity(rs));
  EXPECT_EQ(weyl::from_word(rs, std::vector<int>{0, 1, 0}), weyl::from_word(rs, std::vector<int>{1, 0, 1}));
  EXPECT_EQ(weyl::reflection(rs, Root{{1, 1}}), weyl::from_word(rs, std::vector<int>{0, 1, 0}));
  EXPECT_EQ(weyl::reduced_word(rs, weyl::from_word(rs, std::vector<int>{1, 0, 1})), (std::vector<int>{0, 1, 0}));
  auto inv = weyl::inversion_set(rs, weyl::multiply(rs, s1, s2));
  ASSERT_EQ(inv.size(), 2u);
  EXPECT_EQ(inv[0].coeffs, (IntVec{0, 1}));
  EXPECT_EQ(inv[1].coeffs, (IntVec{1, 1}));
  const ParabolicSubset p1({0});
  auto [v, u] = weyl::parabolic_decompose(rs, weyl::multiply(rs, s2, s1), p1);
  EXPECT_EQ(v, s2);
  EXPECT_EQ(u, s1);
  auto parts = weyl::full_decomposition(rs, weyl::from_word(rs, std::vector<int>{0, 1, 0}), {0});
  EXPECT_EQ(parts[0], s1);
  EXPECT_EQ(parts[1], weyl::multiply(rs, s1, s2));
  EXPECT_EQ(weyl::enumerate(rs, p1).size(), 2u);
  EXPECT_EQ(weyl::reflection(RootSystem::build("B2"), Root{{1, 1}}).length, 3);
}

// omega_P omega_{P~} for the chain alpha_1..alpha_r with alpha_k removed is u_k^{(r)} ... u_k^{(k)}.
TEST(Weyl, RelativeLongestInChain) {
  RootSystem rs = RootSystem::build("A5");
  const int r = 4;
  std::vector<int> chain{0, 1, 2, 3};
  for (int k = 1; k <= r; ++k) {
    std::vector<int> rest;
    for (int i : chain)
      if (i != k - 1) rest.push_back(i);
    WeylElt rel = weyl::multiply(rs, weyl::longest_element(rs, ParabolicSubset(chain)),
                                 weyl::longest_element(rs, ParabolicSubset(rest)));
    std::vector<int> word;
    for (int m = r; m >= k; --m)
      for (int j = m - k + 1; j <= m; ++j) word.push_back(chain[j - 1]);
    EXPECT_EQ(rel, weyl::from_word(rs, word)) << "k=" << k;
  }
}
