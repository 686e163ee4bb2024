#pragma once

#include <memory>
#include <vector>

#include "qcoh/linalg.hpp"
#include "qcoh/qchev.hpp"

namespace qcoh {

// Lift of a class lambda_P in Q^vee / Q_P^vee to the coroot lattice.
struct PWLift {
  Coroot lambda_B;
  ParabolicSubset delta_P_prime;
  WeylElt omega_factor;  // omega_P * omega_{P'}
};

// Lifting data for one parabolic subset, reusable across many lambda_P.
class PWLifter {
 public:
  PWLifter(const RootSystem& rs, ParabolicSubset delta_P);

  const ParabolicSubset& delta_P() const { return delta_P_; }
  // lambda may be any representative; its coefficients on Delta_P are ignored.
  PWLift lift(const IntVec& lambda) const;
  // Every lambda_P + sum a_k alpha_k^vee with |a_k| <= bound pairing into {0, -1} on R_P^+.
  std::vector<IntVec> brute_force_lifts(const IntVec& lambda, int bound) const;
  bool pairs_into_zero_minus_one(const IntVec& coroot) const;
  // Roots of R^+ supported on Delta_P.
  const std::vector<int>& parabolic_roots() const { return parabolic_roots_; }

 private:
  RootSystem rs_;
  ParabolicSubset delta_P_;
  linalg::Matrix inv_;  // inverse of (<alpha_i, alpha_k^vee>)_{i,k in Delta_P}
  std::vector<int> parabolic_roots_;
  WeylElt omega_P_;
  std::vector<WeylElt> omega_sub_;  // longest element of each subset of Delta_P, by bitmask
};

PWLift pw_lift(const RootSystem& rs, const ParabolicSubset& delta_P, const IntVec& lambda_P);

// Quantum cohomology of G/P through the comparison with G/B.
// Classes are QClass values whose Weyl indices lie in W^P and whose q-vectors vanish on Delta_P.
class ParabolicRing {
 public:
  ParabolicRing(std::shared_ptr<const QuantumRing> ring, ParabolicSubset delta_P);

  const QuantumRing& ring() const { return *ring_; }
  const ParabolicSubset& delta_P() const { return lifter_.delta_P(); }
  const PWLifter& lifter() const { return lifter_; }
  const std::vector<int>& minimal_representatives() const { return reps_; }
  bool is_minimal(int w) const { return minimal_[w]; }
  // Degree of q_j in G/P: <c_1(G/P), alpha_j^vee>.
  int q_degree(int j) const { return q_degree_[j]; }

  // (v omega_P omega_{P'}, lambda_B); v must lie in W^P.
  std::pair<int, Multidegree> psi(int v, const Multidegree& lambda_P) const;
  long structure_constant(int u, int v, int w, const Multidegree& lambda_P) const;
  QClass product(int u, int v) const;
  QClass multiply(const QClass& a, const QClass& b) const;

 private:
  std::shared_ptr<const QuantumRing> ring_;
  PWLifter lifter_;
  std::vector<int> reps_;
  std::vector<bool> minimal_;
  IntVec q_degree_;
};

}  // namespace qcoh
