#pragma once

#include <stdexcept>
#include <string>

namespace divlab {

// Math-domain failures: singular curves, degree-too-small, mixed moduli, ...
class math_error : public std::runtime_error {
 public:
  explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration or precision loop crossed its configured cap.
class cap_exceeded : public math_error {
 public:
  explicit cap_exceeded(const std::string& what) : math_error(what) {}
};

// Semantic precondition failures (e.g. point not on curve).
class precondition_error : public std::runtime_error {
 public:
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace divlab
