#pragma once

#include <exception>
#include <vector>

#include "qcoh/grading.hpp"
#include "qcoh/qchev.hpp"

namespace qcoh {

// Runs f(i) for i in [0, n), across OpenMP threads when parallel is set.
// The first exception thrown by any iteration is rethrown after the loop.
template <class F>
void parallel_for(int n, bool parallel, F&& f) {
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < n; ++i) {
    try {
      f(i);
    } catch (...) {
#pragma omp critical(qcoh_parallel_for)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

using ProductTable = std::vector<std::vector<QClass>>;

// Every sigma^u * sigma^v, rows computed independently of the ring's memo.
ProductTable product_table_serial(const QuantumRing& ring);
ProductTable product_table_parallel(const QuantumRing& ring);

struct FiltrationViolation {
  int u = 0;
  int v = 0;
  BasisElement term;
  bool operator==(const FiltrationViolation&) const = default;
};

// Terms q_lambda w of sigma^u * sigma^v with gr(q_lambda w) > gr(u) + gr(v), in (u, v) order.
std::vector<FiltrationViolation> filtration_scan_serial(const QuantumRing& ring, const Grader& gr);
std::vector<FiltrationViolation> filtration_scan_parallel(const QuantumRing& ring, const Grader& gr);

}  // namespace qcoh
