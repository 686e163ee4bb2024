#pragma once

#include <stdexcept>

namespace qcoh {

// Caller supplied something outside a documented precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration would grow past a configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computed quantity broke an invariant that must always hold.
class InternalConsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qcoh
