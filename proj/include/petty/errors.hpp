#pragma once

#include <stdexcept>
#include <string>

namespace petty {

/// Invalid user input: bad schema, violated precondition, malformed data.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A solver could not complete: bracket not found, budget exceeded,
/// inconsistent oracle. Distinct from InputError so the CLI can map
/// exit codes faithfully.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

/// Internal invariant violation (a bug, not a user problem).
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace petty
