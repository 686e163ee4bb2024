#include <gtest/gtest.h>

#include "qcoh/errors.hpp"
#include "qcoh/grading.hpp"
#include "qcoh/serialize.hpp"
#include "table1.hpp"
#include "table3.hpp"

using namespace qcoh;

namespace {

std::shared_ptr<const WeylGroup> group(const char* id) { return std::make_shared<WeylGroup>(RootSystem::build(id)); }

Grader grader(const char* id, std::vector<int> order) {
  auto g = group(id);
  return Grader(g, OrderedParabolic::make(g->roots(), std::move(order)));
}

Grading G(IntVec v) { return Grading(std::move(v)); }

}  // namespace

TEST(Grading, LexicographicOrder) {
  EXPECT_LT(G({0, 5}), G({1, -3}));
  EXPECT_LT(G({1, -3}), G({1, -2}));
  EXPECT_EQ(G({1, 2}) + G({3, -1}), G({4, 1}));
  EXPECT_EQ(G({1, 2}) * 3, G({3, 6}));
  EXPECT_EQ(Grading::unit(3, 1, 2), G({0, 2, 0}));
  EXPECT_EQ(to_string(G({-1, 3})), "(-1,3)");
}

TEST(Grading, FlagThreeTable) {
  Grader gr = grader("A2", {0});
  GradingTable t = grading_table(gr, -2, 4, 0, 6);
  ASSERT_EQ(t.rows.size(), 7u);
  ASSERT_EQ(t.cols.size(), 7u);
  for (int i = 0; i < 7; ++i) {
    EXPECT_EQ(t.rows[i], IntVec{4 - i});
    for (int j = 0; j < 7; ++j) {
      std::string cell;
      for (const auto& b : t.cells[i][j]) cell += (cell.empty() ? "" : ", ") + format_term(gr.group(), b);
      EXPECT_EQ(cell.empty() ? "0" : cell, table1::kCells[i][j]) << "i=" << 4 - i << " j=" << j;
    }
  }
}

TEST(Grading, EmptyBoxAndCap) {
  Grader gr = grader("A2", {0});
  EXPECT_TRUE(grading_table(gr, 3, 2, 0, 6).rows.empty());
  EXPECT_THROW(grading_table(gr, -50, 50, 0, 100, 1000), CapExceeded);
}

TEST(Grading, FlagThreeValues) {
  Grader gr = grader("A2", {0});
  const WeylGroup& g = gr.group();
  EXPECT_EQ(gr.weyl(0), G({0, 0}));
  EXPECT_EQ(gr.weyl(g.from_word(std::vector<int>{1, 0})), G({1, 1}));
  EXPECT_EQ(gr.weyl(g.from_word(std::vector<int>{0, 1, 0})), G({1, 2}));
  EXPECT_EQ(gr.q(0), G({2, 0}));
  EXPECT_EQ(gr.q(1), G({-1, 3}));
  EXPECT_EQ(gr.of(g.from_word(std::vector<int>{0}), {2, 1}), G({4, 3}));
  EXPECT_EQ(gr.of(0, {1, 1}), G({1, 3}));
  EXPECT_EQ(Grader::window(gr.of(g.from_word(std::vector<int>{0}), {0, 1}), 2, 2), IntVec{3});
  EXPECT_EQ(Grader::window(gr.q(0), 1, 1), IntVec{2});
  EXPECT_THROW(Grader::window(gr.q(0), 2, 3), InvalidInput);
}

// Third simple root attaching to the chain alpha_1 - alpha_2.
TEST(Grading, AttachingNodeRank3) {
  EXPECT_EQ(grader("A3", {0, 1}).q(2), G({0, -2, 4}));
  EXPECT_EQ(grader("B3", {0, 1}).q(2), G({0, -4, 6}));
  EXPECT_EQ(grader("C3", {0, 1}).q(2), G({0, -2, 4}));
}

TEST(Grading, ChainClosedForm) {
  for (const char* id : {"A4", "A5", "B4", "C4", "D5", "F4"}) {
    auto g = group(id);
    for (const auto& op : table3::chains(g->roots())) {
      Grader gr(g, op);
      EXPECT_EQ(gr.q(op.order[0]), Grading::unit(gr.dim(), 0, 2));
      for (int j = 2; j <= op.sigma; ++j) {
        Grading want = Grading::unit(gr.dim(), j - 2, 1 - j) + Grading::unit(gr.dim(), j - 1, 1 + j);
        EXPECT_EQ(gr.q(op.order[j - 1]), want) << id << " j=" << j;
      }
    }
  }
}

TEST(Grading, AttachmentTable) {
  int checked = 0;
  for (const char* id : {"A3", "A4", "A5", "B3", "B4", "C3", "C4", "D4", "D5", "G2", "B2", "F4"}) {
    auto g = group(id);
    for (const auto& op : table3::chains(g->roots())) {
      Grader gr(g, op);
      for (int a = 0; a < g->rank(); ++a) {
        if (op.subset().contains(a)) continue;
        auto row = table3::predict(g->roots(), op.order, a);
        if (!row) continue;
        EXPECT_EQ(gr.q(a), row->gr) << id << " row " << row->id << " alpha=" << a + 1;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 100);
}

// With a single parabolic root alpha_1: gr(q_j) = (a, 2 - a), a = <alpha_1, alpha_j^vee>.
TEST(Grading, SingleRootFormula) {
  for (CartanType t : all_types(4)) {
    if (t.rank < 2) continue;
    auto g = std::make_shared<WeylGroup>(RootSystem::build(t));
    for (int p = 0; p < t.rank; ++p) {
      Grader gr(g, canonical_order(g->roots(), ParabolicSubset({p})));
      for (int j = 0; j < t.rank; ++j) {
        const int a = g->roots().cartan(j, p);
        EXPECT_EQ(gr.q(j), G({a, 2 - a})) << t.str() << " p=" << p + 1 << " j=" << j + 1;
      }
    }
  }
}

TEST(Grading, RoutesAgreeAndTotalIsDegree) {
  for (const char* id : {"A3", "B3", "C3", "G2", "D4"}) {
    auto g = group(id);
    for (int mask = 1; mask + 1 < (1 << g->rank()); ++mask) {
      std::vector<int> sub;
      for (int i = 0; i < g->rank(); ++i)
        if (mask >> i & 1) sub.push_back(i);
      if (!is_connected(g->roots(), sub)) continue;
      Grader gr(g, canonical_order(g->roots(), ParabolicSubset(sub)));
      for (int w = 0; w < g->size(); ++w) {
        EXPECT_EQ(gr.weyl_by_decomposition(g->element(w)), gr.weyl(w));
        EXPECT_EQ(gr.weyl_by_inversions(g->element(w)), gr.weyl(w));
        EXPECT_EQ(gr.weyl(w).total(), g->length(w));
      }
      for (int i = 0; i < g->rank(); ++i) {
        IntVec e(g->rank(), 0);
        e[i] = 1;
        EXPECT_EQ(gr.q(i).total(), RootSystem::two_rho_pairing(e));
      }
    }
  }
}

TEST(Grading, UniqueBasisElement) {
  Grader a2 = grader("A2", {0});
  EXPECT_EQ(a2.unique_basis_element({0}), (BasisElement{0, {0, 0}}));
  EXPECT_EQ(a2.unique_basis_element({2}), (BasisElement{0, {1, 0}}));
  EXPECT_EQ(a2.unique_basis_element({1}), (BasisElement{a2.group().from_word(std::vector<int>{0}), {0, 0}}));
  Grader a4 = grader("A4", {0, 1, 2});
  IntVec d(3, 0);
  for (d[0] = 0; d[0] <= 5; ++d[0])
    for (d[1] = 0; d[1] <= 5; ++d[1])
      for (d[2] = 0; d[2] <= 5; ++d[2]) {
        BasisElement b = a4.unique_basis_element(d);
        EXPECT_TRUE(is_nonnegative(b.q));
        EXPECT_EQ(b.q[3], 0);
        EXPECT_EQ(a4.of(b), G({d[0], d[1], d[2], 0}));
      }
  EXPECT_THROW(a4.unique_basis_element({1, 2}), InvalidInput);
}

TEST(Grading, RealizeNonnegativeVectors) {
  Grader gr = grader("B3", {0, 1});
  for (int x = 0; x <= 4; ++x)
    for (int y = 0; y <= 4; ++y)
      for (int z = 0; z <= 4; ++z) {
        BasisElement b = gr.realize(G({x, y, z}));
        EXPECT_TRUE(is_nonnegative(b.q));
        EXPECT_EQ(gr.of(b), G({x, y, z}));
      }
}

TEST(CanonicalOrder, SmallCases) {
  RootSystem a3 = RootSystem::build("A3"), b3 = RootSystem::build("B3"), f4 = RootSystem::build("F4");
  EXPECT_EQ(canonical_order(a3, ParabolicSubset({0, 1})).order, (std::vector<int>{0, 1}));
  EXPECT_EQ(canonical_order(a3, ParabolicSubset({2})).order, (std::vector<int>{2}));
  EXPECT_EQ(canonical_order(b3, ParabolicSubset({1, 2})).order, (std::vector<int>{1, 2}));
  EXPECT_EQ(canonical_order(f4, ParabolicSubset({1, 2})).order, (std::vector<int>{2, 1}));
  EXPECT_FALSE(canonical_order(b3, ParabolicSubset({1, 2})).a_type);
  EXPECT_EQ(canonical_order(b3, ParabolicSubset({1, 2})).sigma, 1);
  EXPECT_THROW(canonical_order(a3, ParabolicSubset({0, 2})), InvalidInput);
  EXPECT_THROW(canonical_order(a3, ParabolicSubset({0, 1, 2})), InvalidInput);
}

TEST(CanonicalOrder, EveryConnectedSubsetUpToRank8) {
  int count = 0;
  for (CartanType t : all_types(8)) {
    RootSystem rs = RootSystem::build(t);
    for (int mask = 1; mask + 1 < (1 << t.rank); ++mask) {
      std::vector<int> sub;
      for (int i = 0; i < t.rank; ++i)
        if (mask >> i & 1) sub.push_back(i);
      if (!is_connected(rs, sub)) continue;
      OrderedParabolic op = canonical_order(rs, ParabolicSubset(sub));
      EXPECT_EQ(op.subset(), ParabolicSubset(sub)) << t.str();
      EXPECT_EQ(op.a_type, is_a_type(rs, sub));
      EXPECT_NO_THROW(OrderedParabolic::make(rs, op.order));
      ++count;
    }
  }
  EXPECT_GT(count, 500);
}

TEST(OrderedParabolic, RejectsBrokenChains) {
  RootSystem a4 = RootSystem::build("A4");
  EXPECT_THROW(OrderedParabolic::make(a4, {0, 2}), InvalidInput);
  EXPECT_THROW(OrderedParabolic::make(a4, {1, 0, 2}), InvalidInput);
  EXPECT_THROW(OrderedParabolic::make(a4, {0, 0}), InvalidInput);
  EXPECT_NO_THROW(OrderedParabolic::make(a4, {2, 1, 0}));
}

TEST(ReducibleGrader, TwoComponentsInA3) {
  auto g = group("A3");
  ReducibleGrader gr = ReducibleGrader::canonical(g, ParabolicSubset({0, 2}));
  EXPECT_EQ(gr.dim(), 3);
  EXPECT_EQ(gr.weyl(g->from_word(std::vector<int>{0, 2})), G({1, 1, 0}));
  EXPECT_EQ(gr.q(1).total(), 2);
  for (int w = 0; w < g->size(); ++w) EXPECT_EQ(gr.weyl(w).total(), g->length(w));
}

TEST(ReducibleGrader, DetachedRootAndSingleComponent) {
  auto g5 = group("A5");
  ReducibleGrader detached = ReducibleGrader::canonical(g5, ParabolicSubset({0, 4}));
  EXPECT_EQ(detached.q(2), G({0, 0, 2}));
  auto g = group("A4");
  ReducibleGrader single(g, {canonical_order(g->roots(), ParabolicSubset({0, 1}))});
  Grader plain(g, canonical_order(g->roots(), ParabolicSubset({0, 1})));
  for (int w = 0; w < g->size(); ++w) EXPECT_EQ(single.weyl(w), plain.weyl(w));
  for (int i = 0; i < 4; ++i) EXPECT_EQ(single.q(i), plain.q(i));
}
