#include <gtest/gtest.h>

#include "qcoh/errors.hpp"
#include "qcoh/pwlift.hpp"
#include "qcoh/serialize.hpp"
#include "table3.hpp"

using namespace qcoh;

namespace {

std::shared_ptr<const QuantumRing> ring(const char* id) {
  return std::make_shared<QuantumRing>(std::make_shared<WeylGroup>(RootSystem::build(id)));
}

}  // namespace

TEST(PWLift, A2FirstNode) {
  RootSystem rs = RootSystem::build("A2");
  PWLift l = pw_lift(rs, ParabolicSubset({0}), {0, 1});
  EXPECT_EQ(l.lambda_B.coeffs, (IntVec{0, 1}));
  EXPECT_EQ(l.delta_P_prime.size(), 0);
  EXPECT_EQ(weyl::reduced_word(rs, l.omega_factor), (std::vector<int>{0}));
}

TEST(PWLift, ZeroLiftsToIdentity) {
  for (const char* id : {"A3", "B3", "G2", "F4"}) {
    RootSystem rs = RootSystem::build(id);
    ParabolicSubset p({0});
    PWLift l = pw_lift(rs, p, IntVec(rs.rank(), 0));
    EXPECT_EQ(l.lambda_B.coeffs, IntVec(rs.rank(), 0));
    EXPECT_EQ(l.delta_P_prime, p);
    EXPECT_EQ(l.omega_factor.length, 0);
  }
}

TEST(PWLift, IgnoresCoefficientsOnDeltaP) {
  RootSystem rs = RootSystem::build("B3");
  PWLifter lifter(rs, ParabolicSubset({0, 1}));
  EXPECT_EQ(lifter.lift({5, -3, 2}).lambda_B, lifter.lift({0, 0, 2}).lambda_B);
}

// Lift of alpha^vee for every simple alpha outside an A-type chain, against the closed forms.
TEST(PWLift, ChainAttachmentClosedForms) {
  int checked = 0;
  for (CartanType t : all_types(8)) {
    RootSystem rs = RootSystem::build(t);
    for (const auto& op : table3::chains(rs)) {
      PWLifter lifter(rs, op.subset());
      for (int a = 0; a < rs.rank(); ++a) {
        if (op.subset().contains(a)) continue;
        auto row = table3::predict(rs, op.order, a);
        if (!row) continue;
        IntVec lambda(rs.rank(), 0);
        lambda[a] = 1;
        PWLift l = lifter.lift(lambda);
        EXPECT_EQ(l.lambda_B.coeffs, row->lambda_B) << t.str() << " row " << row->id;
        EXPECT_EQ(l.omega_factor, weyl::from_word(rs, row->omega_word)) << t.str() << " row " << row->id;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 200);
}

TEST(PWLift, SolverAgreesWithBruteForce) {
  for (const char* id : {"A3", "B3", "C3", "G2", "B2"}) {
    RootSystem rs = RootSystem::build(id);
    for (int mask = 1; mask + 1 < (1 << rs.rank()); ++mask) {
      std::vector<int> sub;
      for (int i = 0; i < rs.rank(); ++i)
        if (mask >> i & 1) sub.push_back(i);
      PWLifter lifter(rs, ParabolicSubset(sub));
      for (int c = 0; c <= 3; ++c) {
        IntVec lambda(rs.rank(), 0);
        for (int i = 0; i < rs.rank(); ++i)
          if (!(mask >> i & 1)) lambda[i] = c + i;
        PWLift l = lifter.lift(lambda);
        auto all = lifter.brute_force_lifts(lambda, 6);
        ASSERT_EQ(all.size(), 1u) << id;
        EXPECT_EQ(all[0], l.lambda_B.coeffs);
        EXPECT_TRUE(lifter.pairs_into_zero_minus_one(l.lambda_B.coeffs));
      }
    }
  }
}

TEST(PWLift, RejectsBadSubsets) {
  RootSystem rs = RootSystem::build("A3");
  EXPECT_THROW(pw_lift(rs, ParabolicSubset({0, 1, 2}), {0, 0, 0}), InvalidInput);
  EXPECT_EQ(pw_lift(rs, ParabolicSubset(std::vector<int>{}), {1, 2, 3}).lambda_B.coeffs, (IntVec{1, 2, 3}));
  EXPECT_THROW(pw_lift(rs, ParabolicSubset({0}), {0, 0}), InvalidInput);
}

// Projective plane: h * h * h = q.
TEST(ParabolicRing, ProjectivePlane) {
  ParabolicRing pr(ring("A2"), ParabolicSubset({1}));
  const WeylGroup& g = pr.ring().group();
  const int h = g.from_word(std::vector<int>{0});
  const Multidegree zero{0, 0};
  QClass h2 = pr.product(h, h);
  EXPECT_EQ(format_class(g, h2), "s[2,1]");
  EXPECT_EQ(format_class(g, pr.multiply(h2, QClass::basis(h, zero))), "q1");
  EXPECT_EQ(pr.q_degree(0), 3);
}

// Projective three-space: h^4 = q.
TEST(ParabolicRing, ProjectiveThreeSpace) {
  ParabolicRing pr(ring("A3"), ParabolicSubset({0, 1}));
  const WeylGroup& g = pr.ring().group();
  const int h = g.from_word(std::vector<int>{2});
  const Multidegree zero{0, 0, 0};
  QClass x = QClass::basis(h, zero);
  for (int k = 0; k < 3; ++k) x = pr.multiply(x, QClass::basis(h, zero));
  EXPECT_EQ(format_class(g, x), "q3");
  EXPECT_EQ(pr.q_degree(2), 4);
}

TEST(ParabolicRing, CommutativeAssociativeIntegral) {
  for (auto [id, sub] : {std::pair<const char*, std::vector<int>>{"A3", {1}}, {"B3", {0, 1}}, {"C3", {2}}, {"G2", {0}}}) {
    ParabolicRing pr(ring(id), ParabolicSubset(sub));
    const auto& reps = pr.minimal_representatives();
    const Multidegree zero(pr.ring().roots().rank(), 0);
    for (int u : reps)
      for (int v : reps) {
        QClass a = pr.product(u, v);
        EXPECT_EQ(a, pr.product(v, u));
        for (const auto& [b, c] : a) {
          EXPECT_TRUE(pr.is_minimal(b.w));
          EXPECT_EQ(c.get_den(), 1);
          EXPECT_GT(sgn(c), 0);
          for (int i : sub) EXPECT_EQ(b.q[i], 0);
        }
      }
    for (std::size_t k = 0; k + 2 < reps.size(); k += 2) {
      QClass x = QClass::basis(reps[k], zero), y = QClass::basis(reps[k + 1], zero), z = QClass::basis(reps[k + 2], zero);
      EXPECT_EQ(pr.multiply(pr.multiply(x, y), z), pr.multiply(x, pr.multiply(y, z))) << id;
    }
  }
}

TEST(ParabolicRing, PsiOfIdentity) {
  ParabolicRing pr(ring("A2"), ParabolicSubset({0}));
  auto [w, l] = pr.psi(0, {0, 1});
  EXPECT_EQ(pr.ring().group().word(w), (std::vector<int>{0}));
  EXPECT_EQ(l, (Multidegree{0, 1}));
}
