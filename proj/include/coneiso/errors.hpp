#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace coneiso {

enum class ErrorKind {
  DegenerateInput,
  SelfIntersecting,
  NotATriangle,
  NotConvex,
  NonpositiveHeight,
  NonpositiveArgument,
  MaxIterations,
  BracketingFailed,
  InvalidGridSpec,
  InfeasibleProgram,
  UnboundedProgram,
  MalformedInput,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::SelfIntersecting: return "SelfIntersecting";
    case ErrorKind::NotATriangle: return "NotATriangle";
    case ErrorKind::NotConvex: return "NotConvex";
    case ErrorKind::NonpositiveHeight: return "NonpositiveHeight";
    case ErrorKind::NonpositiveArgument: return "NonpositiveArgument";
    case ErrorKind::MaxIterations: return "MaxIterations";
    case ErrorKind::BracketingFailed: return "BracketingFailed";
    case ErrorKind::InvalidGridSpec: return "InvalidGridSpec";
    case ErrorKind::InfeasibleProgram: return "InfeasibleProgram";
    case ErrorKind::UnboundedProgram: return "UnboundedProgram";
    case ErrorKind::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline void require_positive_height(double height) {
  if (!(height > 0.0) || !std::isfinite(height)) {
    throw Error(ErrorKind::NonpositiveHeight, "height must be a finite positive number, got " +
                                                  std::to_string(height));
  }
}

}  // namespace coneiso
