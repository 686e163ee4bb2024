#include "qcoh/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>

#include "qcoh/errors.hpp"

namespace qcoh {

std::string CartanType::str() const { return std::string(1, series) + std::to_string(rank); }

CartanType CartanType::parse(std::string_view id) {
  if (id.size() < 2) throw InvalidInput("malformed root system id '" + std::string(id) + "'");
  CartanType t;
  t.series = static_cast<char>(std::toupper(static_cast<unsigned char>(id[0])));
  auto digits = id.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), t.rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw InvalidInput("malformed root system id '" + std::string(id) + "'");
  if (!is_valid_type(t)) throw InvalidInput("unknown root system '" + std::string(id) + "'");
  return t;
}

bool is_valid_type(CartanType t) {
  switch (t.series) {
    case 'A': return t.rank >= 1;
    case 'B': return t.rank >= 2;
    case 'C': return t.rank >= 2;
    case 'D': return t.rank >= 4;
    case 'E': return t.rank >= 6 && t.rank <= 8;
    case 'F': return t.rank == 4;
    case 'G': return t.rank == 2;
    default: return false;
  }
}

std::vector<CartanType> all_types(int max_rank) {
  std::vector<CartanType> out;
  for (char s : std::string("ABCDEFG"))
    for (int n = 1; n <= max_rank; ++n)
      if (is_valid_type({s, n})) out.push_back({s, n});
  return out;
}

std::vector<IntVec> cartan_matrix(CartanType t) {
  if (!is_valid_type(t)) throw InvalidInput("unknown root system '" + t.str() + "'");
  const int n = t.rank;
  std::vector<IntVec> a(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto bond = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (t.series) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 3, n - 1);
      break;
    case 'E':
      bond(0, 2);
      bond(1, 3);
      for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case 'F':
      bond(0, 1);
      bond(1, 2);
      bond(2, 3);
      a[2][1] = -2;  // alpha_2 long, alpha_3 short
      break;
    case 'G':
      bond(0, 1);
      a[0][1] = -3;  // alpha_1 short
      break;
  }
  return a;
}

RootSystem RootSystem::build(CartanType type, int rank_cap) {
  if (!is_valid_type(type)) throw InvalidInput("unknown root system '" + type.str() + "'");
  if (type.rank > rank_cap)
    throw CapExceeded("rank of " + type.str() + " exceeds the rank cap " + std::to_string(rank_cap));
  RootSystem rs = from_cartan(qcoh::cartan_matrix(type), type.str());
  rs.type_ = type;
  return rs;
}

RootSystem RootSystem::build(std::string_view id, int rank_cap) {
  return build(CartanType::parse(id), rank_cap);
}

RootSystem RootSystem::from_cartan(std::vector<IntVec> cartan, std::string label) {
  const int n = static_cast<int>(cartan.size());
  if (n == 0) throw InvalidInput("empty Cartan matrix");
  for (const auto& row : cartan)
    if (static_cast<int>(row.size()) != n) throw InvalidInput("Cartan matrix is not square");
  for (int i = 0; i < n; ++i) {
    if (cartan[i][i] != 2) throw InvalidInput("Cartan matrix diagonal must be 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (cartan[i][j] > 0 || (cartan[i][j] == 0) != (cartan[j][i] == 0))
        throw InvalidInput("Cartan matrix sign pattern is invalid");
    }
  }
  RootSystem rs;
  rs.cartan_ = std::move(cartan);
  rs.label_ = std::move(label);

  // Symmetrizer: a_ij * e_i = a_ji * e_j, solved along a spanning forest as fractions.
  std::vector<long> num(n, 0), den(n, 1);
  for (int start = 0; start < n; ++start) {
    if (num[start] != 0) continue;
    num[start] = 1;
    std::deque<int> queue{start};
    std::vector<int> component{start};
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      for (int j = 0; j < n; ++j) {
        if (!rs.adjacent(i, j) || num[j] != 0) continue;
        num[j] = num[i] * rs.cartan_[i][j];
        den[j] = den[i] * rs.cartan_[j][i];
        long g = std::gcd(num[j], den[j]);
        num[j] /= g;
        den[j] /= g;
        if (den[j] < 0) {
          den[j] = -den[j];
          num[j] = -num[j];
        }
        queue.push_back(j);
        component.push_back(j);
      }
    }
    long l = 1;
    for (int j : component) l = std::lcm(l, den[j]);
    long g = 0;
    for (int j : component) {
      num[j] = num[j] * (l / den[j]);
      den[j] = 1;
      g = std::gcd(g, num[j]);
    }
    for (int j : component) num[j] /= g;
  }
  rs.sym_.assign(num.begin(), num.end());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rs.cartan_[i][j] * rs.sym_[i] != rs.cartan_[j][i] * rs.sym_[j])
        throw InvalidInput("Cartan matrix is not symmetrizable");
  rs.generate();
  return rs;
}

RootSystem RootSystem::subsystem(const std::vector<int>& idx) const {
  const int m = static_cast<int>(idx.size());
  std::vector<IntVec> sub(m, IntVec(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (idx[a] < 0 || idx[a] >= rank()) throw InvalidInput("simple root index out of range");
      sub[a][b] = cartan_[idx[a]][idx[b]];
    }
  std::string label = label_ + "[";
  for (int a = 0; a < m; ++a) label += (a ? "," : "") + std::to_string(idx[a] + 1);
  return from_cartan(std::move(sub), label + "]");
}

void RootSystem::generate() {
  const int n = rank();
  std::set<IntVec> seen;
  std::deque<IntVec> queue;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  // Closure of the simple roots under simple reflections, keeping positive images.
  while (!queue.empty()) {
    IntVec beta = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      int c = 0;
      for (int j = 0; j < n; ++j) c += beta[j] * cartan_[i][j];
      if (c == 0) continue;
      IntVec img = beta;
      img[i] -= c;
      if (img[i] < 0) continue;
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  std::vector<IntVec> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end(), [](const IntVec& a, const IntVec& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
    return ha != hb ? ha < hb : a < b;
  });
  for (auto& r : sorted) {
    root_lookup_[r] = static_cast<int>(roots_.size());
    roots_.push_back(Root{r});
  }
  for (const auto& r : roots_) {
    Coroot c = coroot_of(r);
    coroot_lookup_[c.coeffs] = static_cast<int>(coroots_.size());
    coroots_.push_back(std::move(c));
  }
}

std::optional<int> RootSystem::root_index(const IntVec& coeffs) const {
  auto it = root_lookup_.find(coeffs);
  if (it == root_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> RootSystem::coroot_index(const IntVec& coeffs) const {
  auto it = coroot_lookup_.find(coeffs);
  if (it == coroot_lookup_.end()) return std::nullopt;
  return it->second;
}

int RootSystem::pairing(const IntVec& root, const IntVec& coroot) const {
  const int n = rank();
  int s = 0;
  for (int i = 0; i < n; ++i) {
    if (coroot[i] == 0) continue;
    for (int j = 0; j < n; ++j) s += coroot[i] * root[j] * cartan_[i][j];
  }
  return s;
}

int RootSystem::two_rho_pairing(const IntVec& coroot) {
  return 2 * std::accumulate(coroot.begin(), coroot.end(), 0);
}

Coroot RootSystem::coroot_of(const Root& r) const {
  const int n = rank();
  if (static_cast<int>(r.coeffs.size()) != n) throw InvalidInput("root has wrong dimension");
  IntVec pos = r.coeffs;
  bool negative = std::any_of(pos.begin(), pos.end(), [](int c) { return c < 0; });
  if (negative)
    for (int& c : pos) c = -c;
  if (!root_lookup_.empty() && !root_lookup_.count(pos))
    throw InvalidInput("vector is not a root of " + label_);
  // (gamma, gamma) with (alpha_i, alpha_j) = a_ij e_i; coroot coefficient j is 2 c_j e_j / (gamma, gamma).
  long norm = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) norm += static_cast<long>(pos[i]) * pos[j] * cartan_[i][j] * sym_[i];
  if (norm <= 0) throw InvalidInput("vector is not a root of " + label_);
  Coroot out{IntVec(n)};
  for (int j = 0; j < n; ++j) {
    long v = 2L * pos[j] * sym_[j];
    if (v % norm != 0) throw InvalidInput("vector is not a root of " + label_);
    out.coeffs[j] = static_cast<int>((negative ? -v : v) / norm);
  }
  return out;
}

Root RootSystem::highest_root() const { return roots_.back(); }

}  // namespace qcoh
