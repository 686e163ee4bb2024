#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qcoh {

using IntVec = std::vector<int>;

inline constexpr int kDefaultRankCap = 8;

// Coefficients in the basis of simple roots.
struct Root {
  IntVec coeffs;
  auto operator<=>(const Root&) const = default;
};

// Coefficients in the basis of simple coroots.
struct Coroot {
  IntVec coeffs;
  auto operator<=>(const Coroot&) const = default;
};

struct CartanType {
  char series = 'A';
  int rank = 1;

  std::string str() const;
  // Accepts "B3", "b3", "E8" ...
  static CartanType parse(std::string_view id);
  auto operator<=>(const CartanType&) const = default;
};

// Finite root system given by a Cartan matrix with entry (i, j) = <alpha_j, alpha_i^vee>.
// Simple roots are numbered 0..rank-1 internally (Bourbaki numbering minus one).
class RootSystem {
 public:
  static RootSystem build(CartanType type, int rank_cap = kDefaultRankCap);
  static RootSystem build(std::string_view id, int rank_cap = kDefaultRankCap);
  static RootSystem from_cartan(std::vector<IntVec> cartan, std::string label);

  // Root system spanned by the given simple roots, numbered in the given order.
  RootSystem subsystem(const std::vector<int>& simple_indices) const;

  int rank() const { return static_cast<int>(cartan_.size()); }
  const std::string& label() const { return label_; }
  const std::optional<CartanType>& type() const { return type_; }

  int cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<IntVec>& cartan_matrix() const { return cartan_; }
  bool adjacent(int i, int j) const { return i != j && cartan_[i][j] != 0; }
  // Squared length of alpha_i divided by two, scaled so the shortest root in each component is 1.
  int length_factor(int i) const { return sym_[i]; }

  // Sorted by height, then lexicographically.
  const std::vector<Root>& positive_roots() const { return roots_; }
  // Aligned with positive_roots().
  const std::vector<Coroot>& positive_coroots() const { return coroots_; }
  int num_positive_roots() const { return static_cast<int>(roots_.size()); }

  std::optional<int> root_index(const IntVec& coeffs) const;
  std::optional<int> coroot_index(const IntVec& coeffs) const;

  // <beta, lambda> for beta in the root lattice and lambda in the coroot lattice.
  int pairing(const IntVec& root, const IntVec& coroot) const;
  int pairing(const Root& r, const Coroot& c) const { return pairing(r.coeffs, c.coeffs); }
  // <chi_i, lambda>: the i-th coordinate.
  static int fundamental_pairing(int i, const IntVec& coroot) { return coroot[i]; }
  // <2 rho, lambda>; every simple coroot pairs to 2 with 2 rho.
  static int two_rho_pairing(const IntVec& coroot);

  // Throws InvalidInput when r is not a root (positive or negative).
  Coroot coroot_of(const Root& r) const;
  Root highest_root() const;

 private:
  RootSystem() = default;
  void generate();

  std::vector<IntVec> cartan_;
  IntVec sym_;
  std::string label_;
  std::optional<CartanType> type_;
  std::vector<Root> roots_;
  std::vector<Coroot> coroots_;
  std::map<IntVec, int> root_lookup_;
  std::map<IntVec, int> coroot_lookup_;
};

std::vector<IntVec> cartan_matrix(CartanType type);
bool is_valid_type(CartanType type);
// Every irreducible type of rank between 1 and max_rank.
std::vector<CartanType> all_types(int max_rank);

}  // namespace qcoh
