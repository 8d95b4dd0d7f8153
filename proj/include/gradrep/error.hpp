#pragma once

#include <stdexcept>
#include <string>

namespace gradrep {

/// Malformed input: bad JSON, schema violations, dangling references,
/// dimension mismatches in caller-supplied data.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition does not hold (projective input to tau,
/// indecomposability not certified, ...). The CLI maps this to exit code 1.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation needs module data outside the window it was given.
class WindowError : public PreconditionError {
 public:
  WindowError(const std::string& what, int degree)
      : PreconditionError(what + " (degree " + std::to_string(degree) + ")"),
        degree_(degree) {}
  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

/// Radical computation is not supported in this characteristic.
class UnsupportedRadical : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A state that valid inputs cannot reach.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gradrep
