#pragma once

#include <stdexcept>
#include <string>

namespace denum {

// Caller supplied something outside an operation's domain.
class invalid_argument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// gcd(x, m) != 1 when a modular inverse was requested.
class not_invertible : public invalid_argument {
 public:
  using invalid_argument::invalid_argument;
};

// A self-check that holds for correct code failed. Never a user error.
class invariant_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An oracle was asked for more work than its budget allows.
class resource_limit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

[[noreturn]] inline void fail_invariant(const std::string& what) {
  throw invariant_violation("invariant violated: " + what);
}

inline void ensure(bool condition, const char* what) {
  if (!condition) fail_invariant(what);
}

}  // namespace detail
}  // namespace denum
