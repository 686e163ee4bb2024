#include "qcoh/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <random>

#include "qcoh/errors.hpp"
#include "qcoh/grading.hpp"
#include "qcoh/kernels.hpp"
#include "qcoh/pwlift.hpp"
#include "qcoh/qchev.hpp"
#include "qcoh/serialize.hpp"

namespace qcoh {
namespace {

// ---- case ids: "kind:key=value;key=value" -------------------------------------------------

struct CaseId {
  std::string kind;
  std::map<std::string, std::string> kv;

  static CaseId parse(const std::string& s) {
    CaseId c;
    auto colon = s.find(':');
    if (colon == std::string::npos) throw InvalidInput("malformed case id '" + s + "'");
    c.kind = s.substr(0, colon);
    std::size_t pos = colon + 1;
    while (pos <= s.size()) {
      auto end = s.find(';', pos);
      if (end == std::string::npos) end = s.size();
      auto item = s.substr(pos, end - pos);
      auto eq = item.find('=');
      if (eq == std::string::npos) throw InvalidInput("malformed case id '" + s + "'");
      c.kv[item.substr(0, eq)] = item.substr(eq + 1);
      pos = end + 1;
    }
    return c;
  }

  const std::string& at(const std::string& k) const {
    auto it = kv.find(k);
    if (it == kv.end()) throw InvalidInput("case id lacks key '" + k + "'");
    return it->second;
  }
};

std::string vec_str(const IntVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

IntVec parse_vec(const std::string& s) {
  IntVec out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    auto end = s.find(',', pos);
    if (end == std::string::npos) end = s.size();
    out.push_back(std::stoi(s.substr(pos, end - pos)));
    pos = end + 1;
  }
  return out;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

Verdict pass() { return {}; }
Verdict vacuous() { return {Verdict::Status::Vacuous, "", ""}; }
Verdict fail(std::string lhs, std::string rhs) { return {Verdict::Status::Fail, std::move(lhs), std::move(rhs)}; }

// ---- shared context ----------------------------------------------------------------------

struct Context {
  explicit Context(const VerificationSetup& s) : setup(s), rs(RootSystem::build(s.system)) {
    const int n = rs.rank();
    std::vector<int> idx;
    for (int i : s.parabolic) {
      if (i < 1 || i > n) throw InvalidInput("parabolic index " + std::to_string(i) + " outside 1.." + std::to_string(n));
      idx.push_back(i - 1);
    }
    delta_P = ParabolicSubset(idx);
    if (delta_P.size() == 0 || delta_P.size() >= n)
      throw InvalidInput("parabolic subset must be nonempty and proper");
    group = std::make_shared<WeylGroup>(rs, s.max_weyl);
    ring = std::make_shared<QuantumRing>(group);
    if (!s.order.empty()) {
      std::vector<int> order;
      for (int i : s.order) {
        if (i < 1 || i > n) throw InvalidInput("order index " + std::to_string(i) + " outside 1.." + std::to_string(n));
        order.push_back(i - 1);
      }
      OrderedParabolic op = OrderedParabolic::make(rs, order);
      if (op.subset() != delta_P) throw InvalidInput("order does not list exactly the parabolic subset");
      grader = std::make_shared<Grader>(group, op);
    } else if (is_connected(rs, delta_P.indices)) {
      grader = std::make_shared<Grader>(group, canonical_order(rs, delta_P));
    } else {
      reducible = std::make_shared<ReducibleGrader>(ReducibleGrader::canonical(group, delta_P));
    }
    if (grader) {
      order = grader->ordered().order;
    } else {
      for (const auto& c : reducible->components()) order.insert(order.end(), c.order.begin(), c.order.end());
    }
    dim = grader ? grader->dim() : reducible->dim();
    exhaustive = static_cast<std::size_t>(group->size()) <= s.exhaustive_limit;
  }

  Grading grade(int w, const Multidegree& l) const { return grader ? grader->of(w, l) : reducible->of(w, l); }
  Grading grade(const BasisElement& b) const { return grade(b.w, b.q); }
  Grading grade_w(int w) const { return grader ? grader->weyl(w) : reducible->weyl(w); }
  Multidegree zero() const { return Multidegree(rs.rank(), 0); }
  int elt(const std::string& word) const { return group->from_word(parse_word(word, rs.rank())); }
  std::string word(int w) const { return join_one_based(group->word(w)); }
  std::string term(const BasisElement& b) const { return format_term(*group, b); }
  const Grader& connected() const {
    if (!grader) throw InvalidInput("this suite needs a connected parabolic subset");
    return *grader;
  }
  std::vector<int> free_indices() const {
    std::vector<int> out;
    for (int j = 0; j < rs.rank(); ++j)
      if (!delta_P.contains(j)) out.push_back(j);
    return out;
  }
  // Every q-vector supported on the free indices with entries in [0..max_q].
  std::vector<Multidegree> lambda_box() const {
    std::vector<Multidegree> out;
    auto free = free_indices();
    Multidegree cur = zero();
    std::function<void(std::size_t)> rec = [&](std::size_t a) {
      if (a == free.size()) {
        out.push_back(cur);
        return;
      }
      for (int k = 0; k <= setup.max_q; ++k) {
        cur[free[a]] = k;
        rec(a + 1);
      }
      cur[free[a]] = 0;
    };
    rec(0);
    return out;
  }

  VerificationSetup setup;
  RootSystem rs;
  ParabolicSubset delta_P;
  std::shared_ptr<const WeylGroup> group;
  std::shared_ptr<const QuantumRing> ring;
  std::shared_ptr<const Grader> grader;
  std::shared_ptr<const ReducibleGrader> reducible;
  std::vector<int> order;
  int dim = 0;
  bool exhaustive = true;
};

class Suite {
 public:
  explicit Suite(const Context& c) : ctx(c) {}
  virtual ~Suite() = default;
  virtual std::vector<std::string> cases() = 0;
  virtual Verdict eval(const CaseId& id) const = 0;

  const Context& ctx;
  std::string regime = "exhaustive";
  std::vector<std::string> notes;

 protected:
  std::mt19937_64 rng(std::string_view salt) const { return std::mt19937_64(ctx.setup.seed ^ fnv1a(salt)); }

  std::vector<std::pair<int, int>> pairs(std::string_view salt) {
    std::vector<std::pair<int, int>> out;
    const int nw = ctx.group->size();
    if (ctx.exhaustive) {
      for (int u = 0; u < nw; ++u)
        for (int v = 0; v < nw; ++v) out.emplace_back(u, v);
      return out;
    }
    regime = "sampled";
    auto gen = rng(salt);
    std::uniform_int_distribution<int> pick(0, nw - 1);
    for (std::size_t k = 0; k < ctx.setup.sample_size; ++k) out.emplace_back(pick(gen), pick(gen));
    return out;
  }

  std::string pair_id(std::string_view kind, int u, int v) const {
    return std::string(kind) + ":u=" + ctx.word(u) + ";v=" + ctx.word(v);
  }
};

// ---- filtration --------------------------------------------------------------------------

class FiltrationSuite : public Suite {
 public:
  using Suite::Suite;
  std::vector<std::string> cases() override {
    std::vector<std::string> out;
    for (auto [u, v] : pairs("filtration")) out.push_back(pair_id("pair", u, v));
    return out;
  }
  Verdict eval(const CaseId& id) const override {
    const int u = ctx.elt(id.at("u")), v = ctx.elt(id.at("v"));
    const Grading bound = ctx.grade_w(u) + ctx.grade_w(v);
    for (const auto& [b, c] : ctx.ring->product(u, v)) {
      Grading g = ctx.grade(b);
      if (g > bound) return fail("gr(" + ctx.term(b) + ") = " + to_string(g), "gr(u) + gr(v) = " + to_string(bound));
    }
    return pass();
  }
};

// ---- key lemma ---------------------------------------------------------------------------

class KeyLemmaSuite : public Suite {
 public:
  using Suite::Suite;
  std::vector<std::string> cases() override {
    std::vector<int> us(ctx.group->size());
    for (int u = 0; u < ctx.group->size(); ++u) us[u] = u;
    if (!ctx.exhaustive) {
      regime = "sampled";
      auto gen = rng("key-lemma");
      std::shuffle(us.begin(), us.end(), gen);
      us.resize(std::min<std::size_t>(us.size(), ctx.setup.sample_size / 8 + 1));
      std::sort(us.begin(), us.end());
    }
    std::vector<std::string> out;
    const auto& cor = ctx.rs.positive_coroots();
    for (int u : us)
      for (int k = 0; k < ctx.rs.num_positive_roots(); ++k)
        for (int i = 0; i < ctx.rs.rank(); ++i)
          if (cor[k].coeffs[i] != 0)
            out.push_back("case:u=" + ctx.word(u) + ";gamma=" + vec_str(ctx.rs.positive_roots()[k].coeffs) +
                          ";i=" + std::to_string(i + 1));
    return out;
  }
  Verdict eval(const CaseId& id) const override {
    const int u = ctx.elt(id.at("u"));
    auto k = ctx.rs.root_index(parse_vec(id.at("gamma")));
    if (!k) throw InvalidInput("case names a vector that is not a positive root");
    const int i = std::stoi(id.at("i")) - 1;
    const IntVec& cor = ctx.rs.positive_coroots()[*k].coeffs;
    if (i < 0 || i >= ctx.rs.rank() || cor[i] == 0) return vacuous();
    const int x = ctx.group->times_reflection(u, *k);
    const int lu = ctx.group->length(u), lx = ctx.group->length(x);
    const Grading bound = ctx.grade_w(u) + ctx.grade_w(ctx.group->times_simple(0, i));
    BasisElement term;
    if (lx == lu + 1) {
      term = {x, ctx.zero()};
    } else if (lx == lu + 1 - RootSystem::two_rho_pairing(cor)) {
      term = {x, cor};
    } else {
      return vacuous();
    }
    Grading g = ctx.grade(term);
    if (g > bound) return fail("gr(" + ctx.term(term) + ") = " + to_string(g), "gr(u) + gr(s_i) = " + to_string(bound));
    return pass();
  }
};

// ---- ideal and quotient ------------------------------------------------------------------

class IdealQuotientSuite : public Suite {
 public:
  explicit IdealQuotientSuite(const Context& c) : Suite(c) {
    sub_group_ = std::make_shared<WeylGroup>(c.rs.subsystem(c.delta_P.indices), c.setup.max_weyl);
    sub_ring_ = std::make_shared<QuantumRing>(sub_group_);
    to_sub_.assign(c.group->size(), -1);
    for (int w = 0; w < c.group->size(); ++w) {
      std::vector<int> word;
      bool inside = true;
      for (int i : c.group->word(w)) {
        auto it = std::find(c.delta_P.indices.begin(), c.delta_P.indices.end(), i);
        if (it == c.delta_P.indices.end()) {
          inside = false;
          break;
        }
        word.push_back(static_cast<int>(it - c.delta_P.indices.begin()));
      }
      if (inside) to_sub_[w] = sub_group_->from_word(word);
    }
  }

  std::vector<std::string> cases() override {
    std::vector<std::string> out;
    const int last = ctx.dim - 1;
    const int n = ctx.rs.rank();
    std::vector<std::tuple<int, Multidegree, int>> ideal;
    for (int mask = 0; mask < (1 << n); ++mask) {
      Multidegree l(n, 0);
      for (int i = 0; i < n; ++i) l[i] = mask >> i & 1;
      for (int w = 0; w < ctx.group->size(); ++w) {
        if (ctx.grade(w, l)[last] <= 0) continue;
        for (int v = 0; v < ctx.group->size(); ++v) ideal.emplace_back(w, l, v);
      }
    }
    if (!ctx.exhaustive && ideal.size() > ctx.setup.sample_size) {
      regime = "sampled";
      auto gen = rng("ideal");
      std::shuffle(ideal.begin(), ideal.end(), gen);
      ideal.resize(ctx.setup.sample_size);
    }
    for (const auto& [w, l, v] : ideal)
      out.push_back("ideal:w=" + ctx.word(w) + ";lambda=" + vec_str(l) + ";v=" + ctx.word(v));
    for (int u = 0; u < ctx.group->size(); ++u)
      for (int v = 0; v < ctx.group->size(); ++v)
        if (to_sub_[u] >= 0 && to_sub_[v] >= 0) out.push_back(pair_id("quotient", u, v));
    return out;
  }

  Verdict eval(const CaseId& id) const override {
    const int last = ctx.dim - 1;
    if (id.kind == "ideal") {
      const int w = ctx.elt(id.at("w")), v = ctx.elt(id.at("v"));
      Multidegree l = parse_vec(id.at("lambda"));
      if (ctx.grade(w, l)[last] <= 0) return vacuous();
      for (const auto& [b, c] : ctx.ring->product(w, v).shifted(l)) {
        Grading g = ctx.grade(b);
        if (g[last] <= 0) return fail("gr(" + ctx.term(b) + ") = " + to_string(g), "last coordinate > 0");
      }
      return pass();
    }
    const int u = ctx.elt(id.at("u")), v = ctx.elt(id.at("v"));
    if (to_sub_[u] < 0 || to_sub_[v] < 0) return vacuous();
    QClass image;
    for (const auto& [b, c] : ctx.ring->product(u, v)) {
      Grading g = ctx.grade(b);
      if (g[last] < 0) return fail("gr(" + ctx.term(b) + ") = " + to_string(g), "last coordinate >= 0");
      if (g[last] > 0) continue;
      Multidegree sub_q;
      bool in_p = to_sub_[b.w] >= 0;
      for (int j = 0; j < ctx.rs.rank(); ++j) {
        if (ctx.delta_P.contains(j)) sub_q.push_back(b.q[j]);
        else if (b.q[j] != 0) in_p = false;
      }
      if (!in_p) return fail("term " + ctx.term(b) + " outside I", "lies in W_P x Q_P");
      image.add(BasisElement{to_sub_[b.w], sub_q}, c);
    }
    const QClass& direct = sub_ring_->product(to_sub_[u], to_sub_[v]);
    if (image != direct) return fail(format_class(*sub_group_, image), format_class(*sub_group_, direct));
    return pass();
  }

 private:
  std::shared_ptr<const WeylGroup> sub_group_;
  std::shared_ptr<const QuantumRing> sub_ring_;
  std::vector<int> to_sub_;
};

// ---- graded pieces -----------------------------------------------------------------------

class GradedIsoSuite : public Suite {
 public:
  explicit GradedIsoSuite(const Context& c) : Suite(c), gr_(c.connected()) {
    const auto& op = gr_.ordered();
    if (op.a_type) parabolic_ = std::make_unique<ParabolicRing>(c.ring, c.delta_P);
    else notes.push_back("psi and A/J parts skipped: parabolic subset is not of type A");
    // Brute-force census over W_{P_sigma} x Q_sigma of gradings landing in the lemma box.
    const int sigma = op.sigma, box = c.setup.lemma_box, reach = 2 * (box + 1);
    const ParabolicSubset chain = op.prefix(sigma);
    std::vector<int> sub_w;
    for (int w = 0; w < c.group->size(); ++w) {
      const auto& word = c.group->word(w);
      if (std::all_of(word.begin(), word.end(), [&](int i) { return chain.contains(i); })) sub_w.push_back(w);
    }
    const double work = static_cast<double>(sub_w.size()) * std::pow(2.0 * reach + 1, sigma);
    if (work > 3e7) {
      notes.push_back("uniqueness census skipped: search space too large");
      return;
    }
    census_ready_ = true;
    IntVec a(sigma, -reach);
    for (;;) {
      Multidegree l = c.zero();
      for (int k = 0; k < sigma; ++k) l[op.order[k]] = a[k];
      for (int w : sub_w) {
        Grading g = gr_.of(w, l);
        bool in_box = true;
        for (int k = 0; k < gr_.dim() && in_box; ++k)
          in_box = k < sigma ? (g[k] >= 0 && g[k] <= box) : g[k] == 0;
        if (in_box) ++census_[IntVec(g.v.begin(), g.v.begin() + sigma)];
      }
      int k = 0;
      while (k < sigma && a[k] == reach) a[k++] = -reach;
      if (k == sigma) break;
      ++a[k];
    }
  }

  std::vector<std::string> cases() override {
    const auto& op = gr_.ordered();
    const int sigma = op.sigma, box = ctx.setup.lemma_box;
    std::vector<IntVec> ds;
    IntVec d(sigma, 0);
    for (;;) {
      ds.push_back(d);
      int k = 0;
      while (k < sigma && d[k] == box) d[k++] = 0;
      if (k == sigma) break;
      ++d[k];
    }
    std::vector<std::string> out;
    for (const auto& x : ds) out.push_back("lemma41:d=" + vec_str(x));
    std::vector<std::pair<IntVec, IntVec>> mults;
    for (const auto& a : ds)
      for (const auto& b : ds) mults.emplace_back(a, b);
    if (mults.size() > 20000) {
      regime = "sampled";
      auto gen = rng("amult");
      std::shuffle(mults.begin(), mults.end(), gen);
      mults.resize(20000);
    }
    for (const auto& [a, b] : mults) out.push_back("amult:a=" + vec_str(a) + ";b=" + vec_str(b));
    for (int k = 1; k <= sigma; ++k) out.push_back("psik:k=" + std::to_string(k));
    if (!parabolic_) return out;

    const auto& reps = parabolic_->minimal_representatives();
    auto lambdas = ctx.lambda_box();
    auto gen = rng("psi");
    std::uniform_int_distribution<std::size_t> pick_rep(0, reps.size() - 1), pick_l(0, lambdas.size() - 1);
    for (int s = 0; s < ctx.setup.psi_samples; ++s) {
      int u = reps[pick_rep(gen)], v = reps[pick_rep(gen)];
      const auto& lu = lambdas[pick_l(gen)];
      const auto& lv = lambdas[pick_l(gen)];
      out.push_back("psi:u=" + ctx.word(u) + ";lu=" + vec_str(lu) + ";v=" + ctx.word(v) + ";lv=" + vec_str(lv));
    }
    for (int u : reps)
      for (int v : reps) out.push_back(pair_id("aj", u, v));
    return out;
  }

  Verdict eval(const CaseId& id) const override {
    if (id.kind == "lemma41") return lemma41(parse_vec(id.at("d")));
    if (id.kind == "amult") return amult(parse_vec(id.at("a")), parse_vec(id.at("b")));
    if (id.kind == "psik") return psik(std::stoi(id.at("k")));
    if (!parabolic_) return vacuous();
    if (id.kind == "psi")
      return psi(ctx.elt(id.at("u")), parse_vec(id.at("lu")), ctx.elt(id.at("v")), parse_vec(id.at("lv")));
    if (id.kind == "aj") return aj(ctx.elt(id.at("u")), ctx.elt(id.at("v")));
    throw InvalidInput("unknown case kind '" + id.kind + "'");
  }

 private:
  Grading pad(const IntVec& d) const {
    Grading g = Grading::zero(gr_.dim());
    std::copy(d.begin(), d.end(), g.v.begin());
    return g;
  }

  Verdict lemma41(const IntVec& d) const {
    BasisElement b = gr_.unique_basis_element(d);
    if (gr_.of(b) != pad(d)) return fail("gr(" + ctx.term(b) + ") = " + to_string(gr_.of(b)), to_string(pad(d)));
    if (!is_nonnegative(b.q)) return fail("q-exponents of " + ctx.term(b), "nonnegative");
    if (census_ready_) {
      auto it = census_.find(d);
      const int count = it == census_.end() ? 0 : it->second;
      if (count != 1) return fail(std::to_string(count) + " basis elements with grading " + to_string(pad(d)), "1");
    }
    return pass();
  }

  Verdict amult(const IntVec& a, const IntVec& b) const {
    BasisElement x = gr_.unique_basis_element(a), y = gr_.unique_basis_element(b);
    IntVec s(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) s[k] = a[k] + b[k];
    BasisElement z = gr_.unique_basis_element(s);
    const Grading target = pad(s);
    QClass prod = ctx.ring->product(x.w, y.w).shifted(add_degrees(x.q, y.q));
    for (const auto& [t, c] : prod) {
      Grading g = gr_.of(t);
      if (g > target) return fail("gr(" + ctx.term(t) + ") = " + to_string(g), "<= " + to_string(target));
      if (g == target && !(t == z && c == 1)) return fail("leading term " + format_term(*ctx.group, t, c), ctx.term(z));
    }
    if (prod.coefficient(z) != 1) return fail(format_class(*ctx.group, prod), "leading term " + ctx.term(z));
    return pass();
  }

  // x = u_1^{(k)} generates Gr_{(k)} with x^{k+1} = q_k u_{k-1}^{(k-1)}.
  Verdict psik(int k) const {
    const int dimk = gr_.ordered().sigma;
    const int x = gr_.chain_element(k, 1);
    IntVec ek(dimk, 0);
    ek[k - 1] = 1;
    if (gr_.unique_basis_element(ek) != BasisElement{x, ctx.zero()})
      return fail("A_{e_k}", "sigma^{u_1^{(k)}}");
    QClass cur = QClass::basis(x, ctx.zero());
    for (int j = 2; j <= k + 1; ++j) {
      QClass next = ctx.ring->multiply(cur, QClass::basis(x, ctx.zero()));
      IntVec dj(dimk, 0);
      dj[k - 1] = j;
      const Grading target = pad(dj);
      QClass lead;
      for (const auto& [t, c] : next) {
        Grading g = gr_.of(t);
        if (g > target) return fail("gr(" + ctx.term(t) + ") = " + to_string(g), "<= " + to_string(target));
        if (g == target) lead.add(t, c);
      }
      BasisElement want = gr_.unique_basis_element(dj);
      if (lead != QClass::basis(want.w, want.q)) return fail(format_class(*ctx.group, lead), ctx.term(want));
      cur = lead;
    }
    Multidegree qk = ctx.zero();
    qk[gr_.ordered().order[k - 1]] = 1;
    BasisElement t{gr_.chain_element(k - 1, k - 1), qk};
    if (cur != QClass::basis(t.w, t.q)) return fail(format_class(*ctx.group, cur), ctx.term(t));
    return pass();
  }

  QClass lifted(const QClass& x) const {
    QClass out;
    for (const auto& [b, c] : x) {
      auto [w, l] = parabolic_->psi(b.w, b.q);
      out.add(BasisElement{w, l}, c);
    }
    return out;
  }

  Verdict psi(int u, const Multidegree& lu, int v, const Multidegree& lv) const {
    QClass prod_p = parabolic_->multiply(QClass::basis(u, lu), QClass::basis(v, lv));
    QClass expected = lifted(prod_p);
    auto [xu, xl] = parabolic_->psi(u, lu);
    auto [yu, yl] = parabolic_->psi(v, lv);
    const Grading target = gr_.of(xu, xl) + gr_.of(yu, yl);
    QClass lead;
    for (const auto& [t, c] : ctx.ring->product(xu, yu).shifted(add_degrees(xl, yl))) {
      Grading g = gr_.of(t);
      if (g > target) return fail("gr(" + ctx.term(t) + ") = " + to_string(g), "<= " + to_string(target));
      if (g == target) lead.add(t, c);
    }
    if (lead != expected) return fail(format_class(*ctx.group, lead), format_class(*ctx.group, expected));
    return pass();
  }

  Verdict aj(int u, int v) const {
    const int r = gr_.ordered().r();
    QClass a_part;
    for (const auto& [t, c] : ctx.ring->product(u, v)) {
      Grading g = gr_.of(t);
      const bool on_axis = std::all_of(g.v.begin(), g.v.begin() + r, [](int x) { return x == 0; });
      if (on_axis) a_part.add(t, c);
      else if (!(g < Grading::zero(gr_.dim()))) return fail("gr(" + ctx.term(t) + ") = " + to_string(g), "in Z e_{r+1} or negative");
    }
    QClass expected = lifted(parabolic_->product(u, v));
    if (a_part != expected) return fail(format_class(*ctx.group, a_part), format_class(*ctx.group, expected));
    if (auto closed = projective_space(u, v); closed && a_part != lifted(*closed))
      return fail(format_class(*ctx.group, a_part), "QH*(P^n): " + format_class(*ctx.group, lifted(*closed)));
    return pass();
  }

  // x^a * x^b in Q[x, q]/(x^{n+1} - q) when G/P is projective space.
  std::optional<QClass> projective_space(int u, int v) const {
    const auto& t = ctx.rs.type();
    const int n = ctx.rs.rank();
    if (!t || t->series != 'A' || ctx.delta_P.size() != n - 1) return std::nullopt;
    const int free = ctx.free_indices()[0];
    if (free != 0 && free != n - 1) return std::nullopt;
    std::vector<int> by_length(n + 1, -1);
    for (int w : parabolic_->minimal_representatives()) by_length[ctx.group->length(w)] = w;
    const int s = ctx.group->length(u) + ctx.group->length(v);
    Multidegree q = ctx.zero();
    if (s > n) q[free] = 1;
    return QClass::basis(by_length[s > n ? s - n - 1 : s], q);
  }

  const Grader& gr_;
  std::unique_ptr<ParabolicRing> parabolic_;
  bool census_ready_ = false;
  std::map<IntVec, int> census_;
};

// ---- lifts -------------------------------------------------------------------------------

class PsiGradingSuite : public Suite {
 public:
  explicit PsiGradingSuite(const Context& c) : Suite(c), lifter_(c.rs, c.delta_P) {}
  std::vector<std::string> cases() override {
    if (!ctx.connected().ordered().a_type) {
      notes.push_back("skipped: parabolic subset is not of type A");
      return {};
    }
    std::vector<std::string> out;
    for (const auto& l : ctx.lambda_box()) out.push_back("lift:lambda=" + vec_str(l));
    return out;
  }
  Verdict eval(const CaseId& id) const override {
    const Grader& gr = ctx.connected();
    PWLift l = lifter_.lift(parse_vec(id.at("lambda")));
    const int omega = ctx.group->index_of(l.omega_factor);
    BasisElement b{omega, l.lambda_B.coeffs};
    Grading g = gr.of(b);
    IntVec window = Grader::window(g, 1, gr.ordered().r());
    if (std::any_of(window.begin(), window.end(), [](int x) { return x != 0; }))
      return fail("gr(" + ctx.term(b) + ") = " + to_string(g), "zero on coordinates 1..r");
    if (!is_nonnegative(l.lambda_B.coeffs)) return fail("lambda_B = " + vec_str(l.lambda_B.coeffs), "nonnegative");
    return pass();
  }

 private:
  PWLifter lifter_;
};

class PwLiftSuite : public Suite {
 public:
  explicit PwLiftSuite(const Context& c) : Suite(c), lifter_(c.rs, c.delta_P) {}
  std::vector<std::string> cases() override {
    std::vector<std::string> out;
    for (const auto& l : ctx.lambda_box()) out.push_back("lift:lambda=" + vec_str(l));
    return out;
  }
  Verdict eval(const CaseId& id) const override {
    const RootSystem& rs = ctx.rs;
    IntVec lambda = parse_vec(id.at("lambda"));
    PWLift l = lifter_.lift(lambda);
    const IntVec& lb = l.lambda_B.coeffs;
    for (int j = 0; j < rs.rank(); ++j)
      if (!ctx.delta_P.contains(j) && lb[j] != lambda[j]) return fail("lambda_B = " + vec_str(lb), "congruent to lambda_P");
    if (!lifter_.pairs_into_zero_minus_one(lb)) return fail("lambda_B = " + vec_str(lb), "pairs into {0,-1} on R_P^+");
    std::vector<int> prime;
    for (int i : ctx.delta_P.indices) {
      IntVec e(rs.rank(), 0);
      e[i] = 1;
      if (rs.pairing(e, lb) == 0) prime.push_back(i);
    }
    if (ParabolicSubset(prime) != l.delta_P_prime) return fail("Delta_P' = " + join_one_based(l.delta_P_prime.indices), join_one_based(prime));
    WeylElt wp = weyl::longest_element(rs, ctx.delta_P), wq = weyl::longest_element(rs, ParabolicSubset(prime));
    if (!(weyl::multiply(rs, l.omega_factor, wq) == wp) || l.omega_factor.length != wp.length - wq.length)
      return fail("omega factor " + join_one_based(weyl::reduced_word(rs, l.omega_factor)), "omega_P omega_{P'}");
    auto all = lifter_.brute_force_lifts(lambda, ctx.setup.lift_search_bound);
    if (all.size() != 1 || all[0] != lb)
      return fail(std::to_string(all.size()) + " lifts within the search box", "exactly lambda_B = " + vec_str(lb));
    return pass();
  }

 private:
  PWLifter lifter_;
};

// ---- referee's conjecture ----------------------------------------------------------------

class RefereeSuite : public Suite {
 public:
  using Suite::Suite;
  std::vector<std::string> cases() override {
    ctx.connected();
    std::vector<std::string> out;
    for (const auto& r : ctx.rs.positive_roots()) out.push_back("gamma:gamma=" + vec_str(r.coeffs));
    return out;
  }
  Verdict eval(const CaseId& id) const override {
    const Grader& gr = ctx.connected();
    auto k = ctx.rs.root_index(parse_vec(id.at("gamma")));
    if (!k) throw InvalidInput("case names a vector that is not a positive root");
    const IntVec& cor = ctx.rs.positive_coroots()[*k].coeffs;
    Grading lhs = gr.of(0, cor);
    Grading rhs = Grading::zero(gr.dim());
    for (int b = 0; b < ctx.rs.num_positive_roots(); ++b)
      rhs.v[gr.root_stage(b) - 1] += ctx.rs.pairing(ctx.rs.positive_roots()[b].coeffs, cor);
    if (lhs != rhs) return fail("gr(q_gamma) = " + to_string(lhs), "conjectured " + to_string(rhs));
    return pass();
  }
};

// ---- basics ------------------------------------------------------------------------------

class BasicsSuite : public Suite {
 public:
  using Suite::Suite;
  std::vector<std::string> cases() override {
    std::vector<std::string> out;
    const WeylGroup& g = *ctx.group;
    for (const auto& r : ctx.rs.positive_roots()) out.push_back("length:gamma=" + vec_str(r.coeffs));
    for (int u = 0; u < g.size(); ++u)
      if (weyl::is_minimal_representative(g.element(u), ctx.delta_P))
        for (int i : ctx.delta_P.indices) out.push_back("leading:u=" + ctx.word(u) + ";i=" + std::to_string(i + 1));
    auto ps = pairs("basics");
    for (auto [u, v] : ps) out.push_back(pair_id("classical", u, v));
    for (auto [u, v] : ps) out.push_back(pair_id("homog", u, v));
    for (auto [u, v] : ps)
      if (u < v) out.push_back(pair_id("comm", u, v));
    auto gen = rng("assoc");
    std::uniform_int_distribution<int> pick(0, g.size() - 1);
    for (int s = 0; s < ctx.setup.assoc_samples; ++s) {
      int u = pick(gen), v = pick(gen), w = pick(gen);
      out.push_back("assoc:u=" + ctx.word(u) + ";v=" + ctx.word(v) + ";w=" + ctx.word(w));
    }
    if (ctx.grader)
      for (auto [u, v] : ps)
        if (u <= v) out.push_back(pair_id("semigroup", u, v));
    return out;
  }

  Verdict eval(const CaseId& id) const override {
    const WeylGroup& g = *ctx.group;
    if (id.kind == "length") {
      auto k = ctx.rs.root_index(parse_vec(id.at("gamma")));
      if (!k) throw InvalidInput("case names a vector that is not a positive root");
      const int l = g.length(g.times_reflection(0, *k));
      const int bound = RootSystem::two_rho_pairing(ctx.rs.positive_coroots()[*k].coeffs) - 1;
      if (l > bound) return fail("l(s_gamma) = " + std::to_string(l), "<= " + std::to_string(bound));
      return pass();
    }
    if (id.kind == "leading") {
      const int u = ctx.elt(id.at("u")), i = std::stoi(id.at("i")) - 1;
      const int si = g.times_simple(0, i), x = g.times_simple(u, i);
      const Grading top = ctx.grade_w(x);
      if (top != ctx.grade_w(u) + ctx.grade_w(si)) return fail("gr(us_j) = " + to_string(top), "gr(u) + gr(s_j)");
      for (const auto& [t, c] : ctx.ring->product(u, si)) {
        if (t == BasisElement{x, ctx.zero()}) {
          if (c != 1) return fail("coefficient of sigma^{us_j} = " + c.get_str(), "1");
          continue;
        }
        Grading gt = ctx.grade(t);
        if (!(gt < top)) return fail("gr(" + ctx.term(t) + ") = " + to_string(gt), "< " + to_string(top));
      }
      if (ctx.ring->product(u, si).coefficient(BasisElement{x, ctx.zero()}) != 1)
        return fail("sigma^u * sigma^{s_j} lacks sigma^{us_j}", "coefficient 1");
      return pass();
    }
    if (id.kind == "assoc") {
      const int u = ctx.elt(id.at("u")), v = ctx.elt(id.at("v")), w = ctx.elt(id.at("w"));
      QClass left = ctx.ring->multiply(ctx.ring->product(u, v), QClass::basis(w, ctx.zero()));
      QClass right = ctx.ring->multiply(QClass::basis(u, ctx.zero()), ctx.ring->product(v, w));
      if (left != right) return fail(format_class(g, left), format_class(g, right));
      return pass();
    }
    const int u = ctx.elt(id.at("u")), v = ctx.elt(id.at("v"));
    if (id.kind == "classical") {
      const Grading bound = ctx.grade_w(u) + ctx.grade_w(v);
      for (const auto& [t, c] : ctx.ring->product(u, v))
        if (is_zero(t.q) && ctx.grade_w(t.w) > bound)
          return fail("gr(" + ctx.term(t) + ") = " + to_string(ctx.grade_w(t.w)), "<= " + to_string(bound));
      return pass();
    }
    if (id.kind == "homog") {
      const int total = g.length(u) + g.length(v);
      for (const auto& [t, c] : ctx.ring->product(u, v)) {
        if (c.get_den() != 1 || sgn(c) <= 0) return fail("coefficient " + c.get_str() + " of " + ctx.term(t), "positive integer");
        const int deg = g.length(t.w) + RootSystem::two_rho_pairing(t.q);
        if (deg != total || !is_nonnegative(t.q)) return fail("degree " + std::to_string(deg) + " of " + ctx.term(t), std::to_string(total));
        if (ctx.grade(t).total() != deg) return fail("|gr(" + ctx.term(t) + ")|", std::to_string(deg));
      }
      return pass();
    }
    if (id.kind == "comm") {
      const QClass& a = ctx.ring->product_ordered(u, v);
      const QClass& b = ctx.ring->product_ordered(v, u);
      if (a != b) return fail(format_class(g, a), format_class(g, b));
      return pass();
    }
    if (id.kind == "semigroup") {
      const Grading target = ctx.grade_w(u) + ctx.grade_w(v);
      BasisElement b = ctx.grader->realize(target);
      if (ctx.grade(b) != target || !is_nonnegative(b.q)) return fail("gr(" + ctx.term(b) + ")", to_string(target));
      return pass();
    }
    throw InvalidInput("unknown case kind '" + id.kind + "'");
  }
};

class SkippedSuite : public Suite {
 public:
  SkippedSuite(const Context& c, std::string why) : Suite(c) { notes.push_back(std::move(why)); }
  std::vector<std::string> cases() override { return {}; }
  Verdict eval(const CaseId&) const override { return vacuous(); }
};

std::unique_ptr<Suite> make_suite(std::string_view name, const Context& ctx) {
  if (!ctx.grader && (name == "graded-iso" || name == "psi-grading" || name == "referee"))
    return std::make_unique<SkippedSuite>(ctx, "skipped: parabolic subset is not connected");
  if (name == "filtration") return std::make_unique<FiltrationSuite>(ctx);
  if (name == "key-lemma") return std::make_unique<KeyLemmaSuite>(ctx);
  if (name == "ideal-quotient") return std::make_unique<IdealQuotientSuite>(ctx);
  if (name == "graded-iso") return std::make_unique<GradedIsoSuite>(ctx);
  if (name == "psi-grading") return std::make_unique<PsiGradingSuite>(ctx);
  if (name == "pw-lift") return std::make_unique<PwLiftSuite>(ctx);
  if (name == "referee") return std::make_unique<RefereeSuite>(ctx);
  if (name == "basics") return std::make_unique<BasicsSuite>(ctx);
  throw InvalidInput("unknown suite '" + std::string(name) + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"filtration", "key-lemma", "ideal-quotient", "graded-iso",
                                                 "psi-grading", "pw-lift",  "referee",        "basics"};
  return names;
}

bool is_informational(std::string_view suite) { return suite == "referee"; }

Report run_suite(std::string_view name, const VerificationSetup& setup) {
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
    throw InvalidInput("unknown suite '" + std::string(name) + "'");
  const auto start = std::chrono::steady_clock::now();
  Context ctx(setup);
  auto suite = make_suite(name, ctx);
  const std::vector<std::string> ids = suite->cases();
  std::vector<Verdict> verdicts(ids.size());
  parallel_for(static_cast<int>(ids.size()), setup.parallel,
               [&](int i) { verdicts[i] = suite->eval(CaseId::parse(ids[i])); });

  Report r;
  r.suite = std::string(name);
  r.system = ctx.rs.label();
  for (int i : ctx.delta_P.indices) r.parabolic.push_back(i + 1);
  for (int i : ctx.order) r.order.push_back(i + 1);
  r.informational = is_informational(name);
  r.regime = suite->regime;
  r.notes = suite->notes;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    switch (verdicts[i].status) {
      case Verdict::Status::Vacuous: ++r.vacuous; break;
      case Verdict::Status::Pass: ++r.total; ++r.passes; break;
      case Verdict::Status::Fail:
        ++r.total;
        r.failures.push_back({ids[i], verdicts[i].lhs, verdicts[i].rhs});
        break;
    }
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Verdict replay_case(std::string_view suite, const VerificationSetup& setup, const std::string& case_id) {
  Context ctx(setup);
  auto s = make_suite(suite, ctx);
  return s->eval(CaseId::parse(case_id));
}

Report verify_filtration(const VerificationSetup& s) { return run_suite("filtration", s); }
Report verify_key_lemma(const VerificationSetup& s) { return run_suite("key-lemma", s); }
Report verify_ideal_and_quotient(const VerificationSetup& s) { return run_suite("ideal-quotient", s); }
Report verify_graded_iso(const VerificationSetup& s) { return run_suite("graded-iso", s); }
Report verify_psi_grading(const VerificationSetup& s) { return run_suite("psi-grading", s); }
Report verify_pw_lift(const VerificationSetup& s) { return run_suite("pw-lift", s); }
Report verify_referee_conjecture(const VerificationSetup& s) { return run_suite("referee", s); }
Report verify_basics(const VerificationSetup& s) { return run_suite("basics", s); }

nlohmann::json report_json(const Report& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures) failures.push_back({{"case", f.case_id}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  return {{"suite", r.suite},
          {"system", r.system},
          {"parabolic", r.parabolic},
          {"order", r.order},
          {"total", r.total},
          {"passes", r.passes},
          {"failures", failures},
          {"elapsed_ms", r.elapsed_ms},
          {"regime", r.regime},
          {"vacuous", r.vacuous},
          {"informational", r.informational},
          {"notes", r.notes}};
}

}  // namespace qcoh
