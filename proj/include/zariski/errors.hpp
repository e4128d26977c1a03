#pragma once

#include <stdexcept>
#include <string>

namespace zariski {

/// Input text that does not conform to a literal grammar, or names an
/// unknown generator.
struct parse_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An element handed to a backend it does not belong to.
struct backend_mismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A stated precondition of an operation does not hold.
struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A bounded search ran out of budget. This signals "not found within the
/// budget", never "does not exist".
struct budget_exhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A query reached past the built prefix of an inductive construction; the
/// caller must extend the prefix before retrying.
struct prefix_exhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace zariski
