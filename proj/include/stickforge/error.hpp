#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stickforge {

enum class ErrorCode {
  // graph_core
  DuplicateId,
  DanglingEndpoint,
  EmptyGraph,
  ComponentOutOfRange,
  InvalidParams,
  // arc_presentation
  PageGap,
  SharedEndpoints,
  UnknownLabel,
  BrokenEdgePath,
  DegreeMismatch,
  BindingCountMismatch,
  IsolatedBindingPoint,
  UnknownCatalogEntry,
  // stick_builder
  MissingJunction,
  ClearanceSearchExhausted,
  // equilateral_builder
  MTooSmall,
  NoRotationSolution,
  ClearanceViolation,
  CertificateFailure,
  AmbiguousSplit,
  // bounds
  NegativeInput,
  FlagDomainError,
  // cli_io
  ParseError,
  GenerationExhausted,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::ComponentOutOfRange: return "ComponentOutOfRange";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::PageGap: return "PageGap";
    case ErrorCode::SharedEndpoints: return "SharedEndpoints";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::BrokenEdgePath: return "BrokenEdgePath";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::BindingCountMismatch: return "BindingCountMismatch";
    case ErrorCode::IsolatedBindingPoint: return "IsolatedBindingPoint";
    case ErrorCode::UnknownCatalogEntry: return "UnknownCatalogEntry";
    case ErrorCode::MissingJunction: return "MissingJunction";
    case ErrorCode::ClearanceSearchExhausted: return "ClearanceSearchExhausted";
    case ErrorCode::MTooSmall: return "MTooSmall";
    case ErrorCode::NoRotationSolution: return "NoRotationSolution";
    case ErrorCode::ClearanceViolation: return "ClearanceViolation";
    case ErrorCode::CertificateFailure: return "CertificateFailure";
    case ErrorCode::AmbiguousSplit: return "AmbiguousSplit";
    case ErrorCode::NegativeInput: return "NegativeInput";
    case ErrorCode::FlagDomainError: return "FlagDomainError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::GenerationExhausted: return "GenerationExhausted";
  }
  return "Unknown";
}

/// Every library failure is reported through this exception; `code()` is the
/// stable machine-readable part, `what()` carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

}  // namespace stickforge
