#pragma once

#include <stdexcept>
#include <string>

namespace qschubert {

/// Invalid input: bad type/rank, malformed syntax, or an unmet operation
/// precondition. The CLI maps these to exit code 1.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid (lie_type, rank) combination or an unusable configuration.
class ConfigError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Command-line syntax errors.
class UsageError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A rewrite rule was requested on a quad that does not satisfy its hypothesis.
class RuleNotApplicable : public PreconditionError {
 public:
  explicit RuleNotApplicable(std::string condition)
      : PreconditionError("rule not applicable: " + condition), condition_(std::move(condition)) {}

  const std::string& condition() const { return condition_; }

 private:
  std::string condition_;
};

/// An internal invariant failed. Either a bug or a disproved identity; the CLI
/// maps these to exit code 2.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qschubert
