#pragma once

#include <stdexcept>
#include <string>

namespace legtri {

// Thrown when an exhaustive verification routine is asked to run above the
// size it is guarded for.  Callers may override the guard explicitly.
class UnsupportedScaleError : public std::runtime_error {
 public:
  explicit UnsupportedScaleError(const std::string& what)
      : std::runtime_error(what) {}
};

// Thrown when a structural property that is guaranteed by theory fails to
// hold at runtime.  Seeing this means a bug, or an input that slipped past a
// precondition check.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace legtri
