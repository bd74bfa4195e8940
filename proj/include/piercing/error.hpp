#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace piercing {

enum class ErrorCode {
  Dimension,
  Monotone,
  Index,
  Plane,
  TheoremViolation,
  Feasible,
  Config,
  Empty,
  Parse,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Dimension: return "E_DIMENSION";
    case ErrorCode::Monotone: return "E_MONOTONE";
    case ErrorCode::Index: return "E_INDEX";
    case ErrorCode::Plane: return "E_PLANE";
    case ErrorCode::TheoremViolation: return "E_THEOREM_VIOLATION";
    case ErrorCode::Feasible: return "E_FEASIBLE";
    case ErrorCode::Config: return "E_CONFIG";
    case ErrorCode::Empty: return "E_EMPTY";
    case ErrorCode::Parse: return "E_PARSE";
  }
  return "E_UNKNOWN";
}

// Every failure surfaced by the library carries one of the codes above.
// E_THEOREM_VIOLATION is reserved for outcomes the underlying theorems
// rule out; seeing one means an arithmetic bug, not bad input.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace piercing
