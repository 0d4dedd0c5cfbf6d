#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace cartierlab {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: syntax errors, unknown variables, bad files.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configurable resource budget (S-pair count) was exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition failed.  `kind()` names the condition,
/// e.g. "NotZeroDimensional", "NotPrime", "MissingHints", "Degenerate".
class MathError : public Error {
 public:
  MathError(std::string kind, const std::string& what)
      : Error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// An internal consistency check failed; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// A value, or the reason it could not be determined.  Unknown is an
/// answer, not an error.
template <class T>
struct Outcome {
  std::optional<T> value;
  std::string reason;

  static Outcome of(T v) { return {std::move(v), {}}; }
  static Outcome unknown(std::string why) { return {std::nullopt, std::move(why)}; }
  bool known() const { return value.has_value(); }
};

}  // namespace cartierlab
