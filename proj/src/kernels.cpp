#include "qcoh/kernels.hpp"

namespace qcoh {
namespace {

std::vector<FiltrationViolation> scan_row(const QuantumRing& ring, const Grader& gr, int u) {
  std::vector<FiltrationViolation> out;
  for (int v = 0; v < ring.size(); ++v) {
    const Grading bound = gr.weyl(u) + gr.weyl(v);
    for (const auto& [b, c] : ring.product(u, v))
      if (gr.of(b) > bound) out.push_back({u, v, b});
  }
  return out;
}

}  // namespace

ProductTable product_table_serial(const QuantumRing& ring) {
  ProductTable t;
  t.reserve(ring.size());
  for (int u = 0; u < ring.size(); ++u) t.push_back(ring.compute_row(u));
  return t;
}

ProductTable product_table_parallel(const QuantumRing& ring) {
  ProductTable t(ring.size());
  parallel_for(ring.size(), true, [&](int u) { t[u] = ring.compute_row(u); });
  return t;
}

std::vector<FiltrationViolation> filtration_scan_serial(const QuantumRing& ring, const Grader& gr) {
  std::vector<FiltrationViolation> out;
  for (int u = 0; u < ring.size(); ++u) {
    auto row = scan_row(ring, gr, u);
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

std::vector<FiltrationViolation> filtration_scan_parallel(const QuantumRing& ring, const Grader& gr) {
  std::vector<std::vector<FiltrationViolation>> rows(ring.size());
  parallel_for(ring.size(), true, [&](int u) { rows[u] = scan_row(ring, gr, u); });
  std::vector<FiltrationViolation> out;
  for (auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  return out;
}

}  // namespace qcoh
