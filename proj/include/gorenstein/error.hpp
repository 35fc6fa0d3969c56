#ifndef GORENSTEIN_ERROR_HPP
#define GORENSTEIN_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace gorenstein {

enum class ErrorKind {
  SingularMatrix,
  DegenerateSimplex,
  NonIntegralHeight,
  NotGorenstein,
  DimensionTooSmall,
  BudgetExceeded,
  InvalidParams,
  InvalidChain,
  NoVertexForm,
  UnsupportedVolume,
  BoundViolation,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::DegenerateSimplex: return "DegenerateSimplex";
    case ErrorKind::NonIntegralHeight: return "NonIntegralHeight";
    case ErrorKind::NotGorenstein: return "NotGorenstein";
    case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::InvalidChain: return "InvalidChain";
    case ErrorKind::NoVertexForm: return "NoVertexForm";
    case ErrorKind::UnsupportedVolume: return "UnsupportedVolume";
    case ErrorKind::BoundViolation: return "BoundViolation";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI diagnostics) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gorenstein

#endif  // GORENSTEIN_ERROR_HPP
