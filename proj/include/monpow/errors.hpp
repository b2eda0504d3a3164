#pragma once

#include <stdexcept>
#include <string>

namespace monpow {

/// A size guard refused to materialize or enumerate something too large.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A theorem-backed check failed, or two independent routes disagreed.
/// This always indicates an implementation bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace monpow
