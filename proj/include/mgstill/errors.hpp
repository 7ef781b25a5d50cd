#pragma once

#include <stdexcept>
#include <string>

namespace mgstill {

/// Input text did not match the grammar. Carries a 1-based position.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, int line, int col)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", col " +
                           std::to_string(col) + ")"),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

/// The input was well-formed but the requested analysis rejects it
/// (non-connected grading, membership query on a non-pointed monoid, ...).
class analysis_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A resource guard tripped (pair-queue cap, level cap).
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cooperative cancellation was requested by the caller.
class cancelled_error : public std::runtime_error {
 public:
  cancelled_error() : std::runtime_error("computation cancelled") {}
};

}  // namespace mgstill
