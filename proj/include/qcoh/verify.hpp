#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qcoh/weyl.hpp"

namespace qcoh {

struct VerificationSetup {
  std::string system = "A2";
  std::vector<int> parabolic;  // 1-based
  std::vector<int> order;      // 1-based; empty selects the canonical order
  int max_q = 3;               // lambda_P box [0..max_q]
  std::size_t max_weyl = kDefaultWeylCap;
  std::uint64_t seed = 20240917;
  int assoc_samples = 200;
  int psi_samples = 100;
  int lemma_box = 6;  // d in [0..lemma_box]^sigma
  int lift_search_bound = 6;
  std::size_t exhaustive_limit = 1200;
  std::size_t sample_size = 4000;
  bool parallel = true;
};

struct Failure {
  std::string case_id;
  std::string lhs;
  std::string rhs;
};

struct Report {
  std::string suite;
  std::string system;
  std::vector<int> parabolic;  // 1-based
  std::vector<int> order;      // 1-based, components concatenated
  std::size_t total = 0;
  std::size_t passes = 0;
  std::size_t vacuous = 0;
  std::vector<Failure> failures;
  double elapsed_ms = 0;
  std::string regime = "exhaustive";
  bool informational = false;
  std::vector<std::string> notes;

  bool ok() const { return failures.empty(); }
};

struct Verdict {
  enum class Status { Pass, Fail, Vacuous };
  Status status = Status::Pass;
  std::string lhs;
  std::string rhs;
};

// filtration, key-lemma, ideal-quotient, graded-iso, psi-grading, pw-lift, referee, basics
const std::vector<std::string>& suite_names();
bool is_informational(std::string_view suite);

// Throws InvalidInput for unknown suites or unusable setups.
Report run_suite(std::string_view suite, const VerificationSetup& setup);
// Re-evaluates one case of a suite from its id alone.
Verdict replay_case(std::string_view suite, const VerificationSetup& setup, const std::string& case_id);

Report verify_filtration(const VerificationSetup& s);
Report verify_key_lemma(const VerificationSetup& s);
Report verify_ideal_and_quotient(const VerificationSetup& s);
Report verify_graded_iso(const VerificationSetup& s);
Report verify_psi_grading(const VerificationSetup& s);
Report verify_pw_lift(const VerificationSetup& s);
Report verify_referee_conjecture(const VerificationSetup& s);
Report verify_basics(const VerificationSetup& s);

nlohmann::json report_json(const Report& r);

}  // namespace qcoh
