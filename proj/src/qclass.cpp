#include "qcoh/qclass.hpp"

#include <algorithm>

namespace qcoh {

QClass QClass::basis(int w, Multidegree q, Coeff c) {
  QClass out;
  out.add(BasisElement{w, std::move(q)}, c);
  return out;
}

void QClass::add(const BasisElement& b, const Coeff& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

void QClass::add_scaled(const QClass& other, const Coeff& c, const Multidegree& shift) {
  if (sgn(c) == 0) return;
  for (const auto& [b, x] : other.terms_) add(BasisElement{b.w, add_degrees(b.q, shift)}, c * x);
}

void QClass::add_scaled(const QClass& other, const Coeff& c) {
  if (sgn(c) == 0) return;
  for (const auto& [b, x] : other.terms_) add(b, c * x);
}

QClass QClass::shifted(const Multidegree& shift) const {
  QClass out;
  for (const auto& [b, x] : terms_) out.terms_.emplace(BasisElement{b.w, add_degrees(b.q, shift)}, x);
  return out;
}

QClass::Coeff QClass::coefficient(const BasisElement& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Coeff(0) : it->second;
}

Multidegree add_degrees(const Multidegree& a, const Multidegree& b) {
  Multidegree out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

bool is_nonnegative(const Multidegree& q) {
  return std::all_of(q.begin(), q.end(), [](int x) { return x >= 0; });
}

bool is_zero(const Multidegree& q) {
  return std::all_of(q.begin(), q.end(), [](int x) { return x == 0; });
}

}  // namespace qcoh
