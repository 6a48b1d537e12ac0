#pragma once

#include <stdexcept>
#include <string>

namespace hopforce {

// Raised for malformed user input (bad flags, parity violations, bad files).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The exact solver and the dense eigensolver refuse instances above their cap.
class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A policy asked the engine for a move the hopping rule does not allow.
class HopIllegal : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hopforce
