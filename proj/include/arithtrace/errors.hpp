#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arithtrace {

enum class ErrorCode {
  InvalidInput,
  FieldMismatch,
  DivisionByZero,
  UnsupportedPrime,
  BaseNotPrincipalUnit,
  NotCongruenceElement,
  AlgebraMismatch,
  NonUnimodularArgument,
  NotClosed,
  NotIrreducible,
  LabelOutOfRange,
  EnumerationOverflow,
  NotReciprocal,
  NotMonicNormalizable,
  ReducibleRepresentation,
  NoHyperbolicWitness,
  RankTooLarge,
  NotZariskiDense,
  TooManyArguments,
  SizeMismatch,
};

inline std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::UnsupportedPrime: return "UnsupportedPrime";
    case ErrorCode::BaseNotPrincipalUnit: return "BaseNotPrincipalUnit";
    case ErrorCode::NotCongruenceElement: return "NotCongruenceElement";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::NonUnimodularArgument: return "NonUnimodularArgument";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::LabelOutOfRange: return "LabelOutOfRange";
    case ErrorCode::EnumerationOverflow: return "EnumerationOverflow";
    case ErrorCode::NotReciprocal: return "NotReciprocal";
    case ErrorCode::NotMonicNormalizable: return "NotMonicNormalizable";
    case ErrorCode::ReducibleRepresentation: return "ReducibleRepresentation";
    case ErrorCode::NoHyperbolicWitness: return "NoHyperbolicWitness";
    case ErrorCode::RankTooLarge: return "RankTooLarge";
    case ErrorCode::NotZariskiDense: return "NotZariskiDense";
    case ErrorCode::TooManyArguments: return "TooManyArguments";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
  }
  return "Unknown";
}

/// Every failure in the library is reported through this one exception type;
/// `code()` lets callers (the CLI in particular) branch on the kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace arithtrace
