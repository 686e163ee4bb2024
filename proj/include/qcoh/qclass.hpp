#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>

#include "qcoh/rootsys.hpp"

namespace qcoh {

// Exponent vector of q, indexed by simple coroots.
using Multidegree = IntVec;

// q_lambda sigma^w, with w given by its index in a WeylGroup.
struct BasisElement {
  int w = 0;
  Multidegree q;
  auto operator<=>(const BasisElement&) const = default;
};

// Finite rational combination of basis elements. Zero coefficients are never stored.
class QClass {
 public:
  using Coeff = mpq_class;
  using Terms = std::map<BasisElement, Coeff>;

  QClass() = default;
  static QClass basis(int w, Multidegree q, Coeff c = 1);

  void add(const BasisElement& b, const Coeff& c);
  // this += c * q^shift * other
  void add_scaled(const QClass& other, const Coeff& c, const Multidegree& shift);
  void add_scaled(const QClass& other, const Coeff& c);
  QClass shifted(const Multidegree& shift) const;

  Coeff coefficient(const BasisElement& b) const;
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  bool operator==(const QClass& o) const { return terms_ == o.terms_; }

 private:
  Terms terms_;
};

Multidegree add_degrees(const Multidegree& a, const Multidegree& b);
bool is_nonnegative(const Multidegree& q);
bool is_zero(const Multidegree& q);

}  // namespace qcoh
