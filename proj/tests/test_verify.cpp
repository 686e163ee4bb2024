#include <gtest/gtest.h>

#include "qcoh/errors.hpp"
#include "qcoh/verify.hpp"

using namespace qcoh;

namespace {

VerificationSetup setup(const char* system, std::vector<int> parabolic) {
  VerificationSetup s;
  s.system = system;
  s.parabolic = std::move(parabolic);
  return s;
}

}  // namespace

TEST(Verify, AllSuitesPassOnA2) {
  for (const auto& name : suite_names()) {
    Report r = run_suite(name, setup("A2", {1}));
    EXPECT_TRUE(r.ok()) << name;
    EXPECT_GT(r.total, 0u) << name;
    EXPECT_EQ(r.passes, r.total);
    EXPECT_EQ(r.system, "A2");
    EXPECT_EQ(r.order, (std::vector<int>{1}));
  }
}

TEST(Verify, ChainSystemsPass) {
  for (auto [sys, par] : {std::pair<const char*, std::vector<int>>{"A3", {1, 2}}, {"B2", {2}}, {"G2", {1}}}) {
    for (const auto& name : suite_names()) {
      Report r = run_suite(name, setup(sys, par));
      if (!r.informational) EXPECT_TRUE(r.ok()) << sys << " " << name << ": " << (r.failures.empty() ? "" : r.failures[0].case_id);
    }
  }
}

TEST(Verify, FiltrationCountsEveryPair) {
  Report r = verify_filtration(setup("A3", {2}));
  EXPECT_EQ(r.total, 576u);
  EXPECT_EQ(r.regime, "exhaustive");
}

TEST(Verify, KeyLemmaVacuousCasesCounted) {
  Report r = verify_key_lemma(setup("A2", {1}));
  EXPECT_EQ(r.total + r.vacuous, 6u * 4u);
  EXPECT_GT(r.vacuous, 0u);
}

TEST(Verify, ReducibleParabolicSkipsConnectedOnlySuites) {
  Report r = verify_graded_iso(setup("A3", {1, 3}));
  EXPECT_EQ(r.total, 0u);
  ASSERT_FALSE(r.notes.empty());
  EXPECT_TRUE(verify_filtration(setup("A3", {1, 3})).ok());
  EXPECT_TRUE(verify_ideal_and_quotient(setup("A3", {1, 3})).ok());
}

TEST(Verify, NonATypeSkipsPsiGrading) {
  Report r = verify_psi_grading(setup("B3", {2, 3}));
  EXPECT_EQ(r.total, 0u);
  EXPECT_FALSE(r.notes.empty());
}

TEST(Verify, ExplicitOrderHonoured) {
  VerificationSetup s = setup("A3", {1, 2});
  s.order = {2, 1};
  Report r = verify_filtration(s);
  EXPECT_EQ(r.order, (std::vector<int>{2, 1}));
  EXPECT_TRUE(r.ok());
  s.order = {1, 3};
  EXPECT_THROW(verify_filtration(s), InvalidInput);
}

TEST(Verify, RejectsBadSetups) {
  EXPECT_THROW(run_suite("nonsense", setup("A2", {1})), InvalidInput);
  EXPECT_THROW(run_suite("basics", setup("A2", {})), InvalidInput);
  EXPECT_THROW(run_suite("basics", setup("A2", {1, 2})), InvalidInput);
  EXPECT_THROW(run_suite("basics", setup("A2", {3})), InvalidInput);
  VerificationSetup capped = setup("B3", {1});
  capped.max_weyl = 10;
  EXPECT_THROW(run_suite("basics", capped), CapExceeded);
}

TEST(Verify, SampledRegimeIsSeeded) {
  VerificationSetup s = setup("B3", {1, 2});
  s.exhaustive_limit = 10;
  s.sample_size = 300;
  Report a = verify_filtration(s), b = verify_filtration(s);
  EXPECT_EQ(a.regime, "sampled");
  EXPECT_EQ(a.total, 300u);
  EXPECT_EQ(a.passes, b.passes);
  EXPECT_TRUE(a.ok());
}

TEST(Verify, ReplayCase) {
  VerificationSetup s = setup("A2", {1});
  EXPECT_EQ(replay_case("filtration", s, "pair:u=1;v=1,2,1").status, Verdict::Status::Pass);
  EXPECT_EQ(replay_case("key-lemma", s, "case:u=;gamma=1,0;i=1").status, Verdict::Status::Pass);
  EXPECT_EQ(replay_case("key-lemma", s, "case:u=;gamma=1,1;i=2").status, Verdict::Status::Vacuous);
  EXPECT_EQ(replay_case("basics", s, "comm:u=1,2;v=2,1").status, Verdict::Status::Pass);
  EXPECT_THROW(replay_case("filtration", s, "garbage"), InvalidInput);
  EXPECT_THROW(replay_case("key-lemma", s, "case:u=;gamma=2,2;i=1"), InvalidInput);
}

TEST(Verify, ReplayOutsideDomainIsVacuous) {
  VerificationSetup s = setup("A3", {1, 2});
  Verdict v = replay_case("graded-iso", s, "aj:u=3;v=3");
  EXPECT_EQ(v.status, Verdict::Status::Pass);
  Verdict bad = replay_case("ideal-quotient", s, "quotient:u=1;v=3");
  EXPECT_EQ(bad.status, Verdict::Status::Vacuous);
}

TEST(Verify, ReportJsonSchema) {
  Report r = verify_referee_conjecture(setup("A2", {1}));
  auto j = report_json(r);
  for (const char* key : {"suite", "system", "parabolic", "order", "total", "passes", "failures", "elapsed_ms", "regime",
                          "informational", "vacuous", "notes"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_TRUE(j["informational"].get<bool>());
  EXPECT_EQ(j["total"].get<int>(), 3);
}

TEST(Verify, SerialAndParallelReportsAgree) {
  VerificationSetup s = setup("B3", {1, 2});
  VerificationSetup t = s;
  t.parallel = false;
  for (const char* name : {"key-lemma", "basics"}) {
    Report a = run_suite(name, s), b = run_suite(name, t);
    EXPECT_EQ(a.total, b.total);
    EXPECT_EQ(a.passes, b.passes);
    EXPECT_EQ(a.vacuous, b.vacuous);
  }
}
