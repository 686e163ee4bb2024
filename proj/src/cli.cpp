#include "qcoh/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "qcoh/config.hpp"
#include "qcoh/errors.hpp"
#include "qcoh/grading.hpp"
#include "qcoh/pwlift.hpp"
#include "qcoh/qchev.hpp"
#include "qcoh/serialize.hpp"
#include "qcoh/verify.hpp"

namespace qcoh {
namespace {

struct Flags {
  std::optional<std::string> config, system, parabolic, order, format, out, suites;
  std::optional<int> max_q;
  std::optional<std::size_t> max_weyl;
  std::optional<std::uint64_t> seed;
  std::string positional_system;

  RunConfig resolve() const {
    RunConfig c = config ? load_config(*config) : RunConfig{};
    if (!positional_system.empty()) c.system = positional_system;
    if (system) c.system = *system;
    if (parabolic) c.parabolic = *parabolic;
    if (order) c.order = *order;
    if (format) c.format = *format;
    if (out) c.out = *out;
    if (suites) c.suites = *suites;
    if (max_q) c.max_q = *max_q;
    if (max_weyl) c.max_weyl = *max_weyl;
    if (seed) c.seed = *seed;
    if (c.max_q < 0) throw InvalidInput("--max-q must be nonnegative");
    return c;
  }
};

void add_common(CLI::App* app, Flags& f) {
  app->add_option("system_id", f.positional_system, "Root system, e.g. B3");
  app->add_option("--config", f.config, "key=value config file; flags override it");
  app->add_option("--system", f.system, "Root system, e.g. B3");
  app->add_option("--parabolic", f.parabolic, "Parabolic simple roots, 1-based, e.g. 1,2");
  app->add_option("--order", f.order, "Explicit order of the parabolic roots");
  app->add_option("--format", f.format, "markdown, json or csv");
  app->add_option("--out", f.out, "Output path");
  app->add_option("--max-q", f.max_q, "Box bound for q-exponents");
  app->add_option("--max-weyl", f.max_weyl, "Cap on |W|");
  app->add_option("--seed", f.seed, "Seed for sampled checks");
}

struct Session {
  explicit Session(const RunConfig& c)
      : cfg(c), group(std::make_shared<WeylGroup>(RootSystem::build(c.system), c.max_weyl)) {}

  const RootSystem& rs() const { return group->roots(); }

  ParabolicSubset parabolic(bool required) const {
    if (cfg.parabolic.empty()) {
      if (required) throw InvalidInput("--parabolic is required for this command");
      return {};
    }
    ParabolicSubset p(parse_index_list(cfg.parabolic, rs().rank()));
    if (p.size() == 0 || p.size() >= rs().rank()) throw InvalidInput("parabolic subset must be nonempty and proper");
    return p;
  }

  OrderedParabolic ordered() const {
    ParabolicSubset p = parabolic(true);
    if (cfg.order.empty()) return canonical_order(rs(), p);
    OrderedParabolic op = OrderedParabolic::make(rs(), parse_index_list(cfg.order, rs().rank()));
    if (op.subset() != p) throw InvalidInput("--order must list exactly the parabolic roots");
    return op;
  }

  int element(const std::string& text, const char* flag, std::ostream& err) const {
    auto word = parse_word(text, rs().rank());
    const int w = group->from_word(word);
    if (group->length(w) != static_cast<int>(word.size()))
      err << "warning: " << flag << " word '" << text << "' is not reduced; using "
          << (group->length(w) ? join_one_based(group->word(w)) : std::string("e")) << "\n";
    return w;
  }

  RunConfig cfg;
  std::shared_ptr<const WeylGroup> group;
};

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw InvalidInput("cannot write '" + cfg.out + "'");
  f << text;
}

std::string render_class(Format fmt, const WeylGroup& g, const QClass& x, nlohmann::json head) {
  if (fmt == Format::Json) {
    head["product"] = class_json(g, x);
    return head.dump(2) + "\n";
  }
  if (fmt == Format::Csv) {
    std::string s = "coeff,word,q\n";
    for (const auto& [b, c] : x) {
      std::string q;
      for (std::size_t i = 0; i < b.q.size(); ++i) q += (i ? " " : "") + std::to_string(b.q[i]);
      s += c.get_str() + ",\"" + join_one_based(g.word(b.w)) + "\"," + q + "\n";
    }
    return s;
  }
  return format_class(g, x) + "\n";
}

int cmd_qprod(const RunConfig& cfg, const std::string& u, const std::string& v, std::ostream& out, std::ostream& err) {
  Session s(cfg);
  QuantumRing ring(s.group);
  const int a = s.element(u, "--u", err), b = s.element(v, "--v", err);
  const nlohmann::json head = {{"system", s.rs().label()}, {"u", weyl_json(*s.group, a)}, {"v", weyl_json(*s.group, b)}};
  emit(cfg, render_class(parse_format(cfg.format), *s.group, ring.product(a, b), head), out);
  return 0;
}

int cmd_qhp(const RunConfig& cfg, const std::string& u, const std::string& v, std::ostream& out, std::ostream& err) {
  Session s(cfg);
  ParabolicRing ring(std::make_shared<QuantumRing>(s.group), s.parabolic(true));
  const int a = s.element(u, "--u", err), b = s.element(v, "--v", err);
  for (int w : {a, b})
    if (!ring.is_minimal(w)) throw InvalidInput("'" + join_one_based(s.group->word(w)) + "' is not a minimal coset representative");
  nlohmann::json head = {{"system", s.rs().label()}, {"u", weyl_json(*s.group, a)}, {"v", weyl_json(*s.group, b)}};
  head["parabolic"] = nlohmann::json::array();
  for (int i : ring.delta_P().indices) head["parabolic"].push_back(i + 1);
  emit(cfg, render_class(parse_format(cfg.format), *s.group, ring.product(a, b), head), out);
  return 0;
}

int cmd_grading_table(const RunConfig& cfg, int rmin, int rmax, int cmin, int cmax, std::ostream& out) {
  Session s(cfg);
  Grader gr(s.group, s.ordered());
  GradingTable t = grading_table(gr, rmin, rmax, cmin, cmax);
  emit(cfg, render_grading_table(*s.group, t, parse_format(cfg.format)), out);
  return 0;
}

int cmd_mult_table(const RunConfig& cfg, std::ostream& out) {
  Session s(cfg);
  QuantumRing ring(s.group);
  ring.warm(true);
  const WeylGroup& g = *s.group;
  const Format fmt = parse_format(cfg.format);
  std::ostringstream os;
  nlohmann::json arr = nlohmann::json::array();
  if (fmt == Format::Markdown) os << "| u | v | product |\n|---|---|---|\n";
  if (fmt == Format::Csv) os << "u,v,product\n";
  for (int u = 0; u < g.size(); ++u)
    for (int v = u; v < g.size(); ++v) {
      const QClass& p = ring.product(u, v);
      const std::string us = join_one_based(g.word(u)), vs = join_one_based(g.word(v));
      if (fmt == Format::Json) arr.push_back({{"u", weyl_json(g, u)}, {"v", weyl_json(g, v)}, {"product", class_json(g, p)}});
      else if (fmt == Format::Csv) os << '"' << us << "\",\"" << vs << "\",\"" << format_class(g, p) << "\"\n";
      else os << "| " << (us.empty() ? "e" : us) << " | " << (vs.empty() ? "e" : vs) << " | " << format_class(g, p) << " |\n";
    }
  if (fmt == Format::Json) os << nlohmann::json{{"system", s.rs().label()}, {"products", arr}}.dump(2) << "\n";
  emit(cfg, os.str(), out);
  return 0;
}

// "2:1,3:0" or a JSON object {"2": 1}; keys are 1-based simple indices.
IntVec parse_lambda(const std::string& text, int rank) {
  IntVec lambda(rank, 0);
  auto set = [&](int key, int value) {
    if (key < 1 || key > rank) throw InvalidInput("lambda index " + std::to_string(key) + " outside 1.." + std::to_string(rank));
    lambda[key - 1] = value;
  };
  if (!text.empty() && text.front() == '{') {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw InvalidInput("--lambda is not a JSON object");
    for (auto& [k, v] : j.items()) {
      if (!v.is_number_integer()) throw InvalidInput("--lambda values must be integers");
      set(std::stoi(k), v.get<int>());
    }
    return lambda;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw InvalidInput("--lambda entries look like index:value");
    try {
      set(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const InvalidInput*>(&e)) throw;
      throw InvalidInput("malformed --lambda entry '" + item + "'");
    }
  }
  return lambda;
}

int cmd_pw(const RunConfig& cfg, const std::string& lambda_text, std::ostream& out) {
  const RootSystem rs = RootSystem::build(cfg.system);
  if (cfg.parabolic.empty()) throw InvalidInput("--parabolic is required for this command");
  ParabolicSubset p(parse_index_list(cfg.parabolic, rs.rank()));
  PWLift l = pw_lift(rs, p, parse_lambda(lambda_text, rs.rank()));
  const Format fmt = parse_format(cfg.format);
  std::ostringstream os;
  const auto omega = weyl::reduced_word(rs, l.omega_factor);
  if (fmt == Format::Json) {
    os << lift_json(rs, l).dump(2) << "\n";
  } else if (fmt == Format::Csv) {
    std::string lb;
    for (std::size_t i = 0; i < l.lambda_B.coeffs.size(); ++i) lb += (i ? " " : "") + std::to_string(l.lambda_B.coeffs[i]);
    os << "lambda_B,delta_P_prime,omega_factor\n" << lb << ",\"" << join_one_based(l.delta_P_prime.indices) << "\",\""
       << join_one_based(omega) << "\"\n";
  } else {
    std::string lb;
    for (std::size_t i = 0; i < l.lambda_B.coeffs.size(); ++i) {
      const int c = l.lambda_B.coeffs[i];
      if (c == 0) continue;
      if (!lb.empty()) lb += c < 0 ? " - " : " + ";
      else if (c < 0) lb += "-";
      if (std::abs(c) != 1) lb += std::to_string(std::abs(c)) + "*";
      lb += "a" + std::to_string(i + 1) + "^v";
    }
    os << "lambda_B = " << (lb.empty() ? "0" : lb) << "\n"
       << "Delta_P' = {" << join_one_based(l.delta_P_prime.indices) << "}\n"
       << "omega_P omega_P' = " << (omega.empty() ? "e" : "s[" + join_one_based(omega) + "]") << "\n";
  }
  emit(cfg, os.str(), out);
  return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const RootSystem rs = RootSystem::build(cfg.system);
  if (cfg.parabolic.empty()) throw InvalidInput("--parabolic is required for this command");
  VerificationSetup setup;
  setup.system = cfg.system;
  for (int i : parse_index_list(cfg.parabolic, rs.rank())) setup.parabolic.push_back(i + 1);
  if (!cfg.order.empty())
    for (int i : parse_index_list(cfg.order, rs.rank())) setup.order.push_back(i + 1);
  setup.max_q = cfg.max_q;
  setup.max_weyl = cfg.max_weyl;
  setup.seed = cfg.seed;

  std::vector<std::string> names;
  if (cfg.suites == "all") {
    names = suite_names();
  } else {
    std::stringstream ss(cfg.suites);
    std::string n;
    while (std::getline(ss, n, ','))
      if (std::find(suite_names().begin(), suite_names().end(), n) == suite_names().end())
        throw InvalidInput("unknown suite '" + n + "'");
      else
        names.push_back(n);
  }

  nlohmann::json reports = nlohmann::json::array();
  bool ok = true;
  for (const auto& n : names) {
    Report r = run_suite(n, setup);
    reports.push_back(report_json(r));
    if (!r.ok() && !r.informational) ok = false;
    out << (r.ok() ? "PASS" : r.informational ? "INFO" : "FAIL") << "  " << n << "  " << r.system << " {"
        << join_one_based([&] {
             std::vector<int> z;
             for (int i : r.parabolic) z.push_back(i - 1);
             return z;
           }())
        << "}  cases=" << r.total << " failures=" << r.failures.size() << " vacuous=" << r.vacuous << " regime=" << r.regime
        << "\n";
    for (const auto& note : r.notes) out << "      note: " << note << "\n";
    for (std::size_t k = 0; k < std::min<std::size_t>(r.failures.size(), 3); ++k)
      out << "      " << r.failures[k].case_id << ": " << r.failures[k].lhs << " vs " << r.failures[k].rhs << "\n";
  }
  if (!cfg.out.empty()) {
    std::ofstream f(cfg.out);
    if (!f) throw InvalidInput("cannot write '" + cfg.out + "'");
    f << nlohmann::json{{"ok", ok}, {"reports", reports}}.dump(2) << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum cohomology of flag varieties: products, gradings and verification suites"};
  app.require_subcommand(1);

  Flags f;
  std::string u, v, lambda;
  int rmin = -2, rmax = 4, cmin = 0, cmax = 6;

  auto* qprod = app.add_subcommand("qprod", "Quantum product of two Schubert classes in QH*(G/B)");
  add_common(qprod, f);
  qprod->add_option("--u", u, "First Weyl element as a word, e.g. 1,2")->required();
  qprod->add_option("--v", v, "Second Weyl element")->required();

  auto* qhp = app.add_subcommand("qhp", "Quantum product in QH*(G/P)");
  add_common(qhp, f);
  qhp->add_option("--u", u, "Minimal coset representative")->required();
  qhp->add_option("--v", v, "Minimal coset representative")->required();

  auto* table = app.add_subcommand("grading-table", "Basis elements laid out by grading");
  add_common(table, f);
  table->add_option("--row-min", rmin, "Lower bound on the first r coordinates");
  table->add_option("--row-max", rmax, "Upper bound on the first r coordinates");
  table->add_option("--col-min", cmin, "Lower bound on the last coordinate");
  table->add_option("--col-max", cmax, "Upper bound on the last coordinate");

  auto* mult = app.add_subcommand("mult-table", "All products sigma^u * sigma^v with u <= v");
  add_common(mult, f);

  auto* pw = app.add_subcommand("pw", "Lift of lambda_P to the coroot lattice");
  add_common(pw, f);
  pw->add_option("--lambda", lambda, "Entries index:value, or a JSON object");

  auto* verify = app.add_subcommand("verify", "Run verification suites; --out receives the JSON report");
  add_common(verify, f);
  verify->add_option("--suites", f.suites, "all, or a comma-separated list of suite names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const RunConfig cfg = f.resolve();
    parse_format(cfg.format);
    if (*qprod) return cmd_qprod(cfg, u, v, out, err);
    if (*qhp) return cmd_qhp(cfg, u, v, out, err);
    if (*table) return cmd_grading_table(cfg, rmin, rmax, cmin, cmax, out);
    if (*mult) return cmd_mult_table(cfg, out);
    if (*pw) return cmd_pw(cfg, lambda, out);
    if (*verify) return cmd_verify(cfg, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalConsistency& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"qcoh"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qcoh
