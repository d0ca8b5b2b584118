#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace torlab {

enum class ErrorKind {
  DomainNotAField,
  DomainMismatch,
  ShapeMismatch,
  CompositionNotZero,
  RingMismatch,
  ZeroElement,
  NotNormalizable,
  TruncationNotFinite,
  RootDoesNotExist,
  NotNilpotent,
  NonMonomial,
  FamilyNotDecidable,
  GammaNotSchematic,
  WindowTooSmall,
  BoundExhausted,
  Parse,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DomainNotAField: return "domain-not-a-field";
    case ErrorKind::DomainMismatch: return "domain-mismatch";
    case ErrorKind::ShapeMismatch: return "shape-mismatch";
    case ErrorKind::CompositionNotZero: return "composition-not-zero";
    case ErrorKind::RingMismatch: return "ring-mismatch";
    case ErrorKind::ZeroElement: return "zero-element";
    case ErrorKind::NotNormalizable: return "not-normalizable";
    case ErrorKind::TruncationNotFinite: return "truncation-not-finite";
    case ErrorKind::RootDoesNotExist: return "root-does-not-exist";
    case ErrorKind::NotNilpotent: return "not-nilpotent";
    case ErrorKind::NonMonomial: return "non-monomial";
    case ErrorKind::FamilyNotDecidable: return "family-not-decidable";
    case ErrorKind::GammaNotSchematic: return "gamma-not-schematic";
    case ErrorKind::WindowTooSmall: return "window-too-small";
    case ErrorKind::BoundExhausted: return "bound-exhausted";
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::InvalidArgument: return "invalid-argument";
  }
  return "unknown-error";
}

}  // namespace torlab
