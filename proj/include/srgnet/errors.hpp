#pragma once

#include <stdexcept>
#include <string>

namespace srgnet {

enum class ErrorCode {
  InvalidGraph,
  InvalidArgument,
  NotRegular,
  NotStronglyRegular,
  Degenerate,
  Disconnected,
  RootOutOfRange,
  MalformedHeader,
  TruncatedBitstream,
  NonCanonicalPadding,
  UnsupportedOrder,
  SizeTooSmall,
  UnsupportedFamily,
  NotThreeStrata,
  BlockSumViolation,
  JointDiagonalizationFailure,
  NegativeDiscriminant,
  SingularBlock,
  DOutOfRange,
  EmptyOrFullSubset,
  GridTooCoarse,
  CaseMismatch,
  MixedParameters,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NotStronglyRegular: return "NotStronglyRegular";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::RootOutOfRange: return "RootOutOfRange";
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::TruncatedBitstream: return "TruncatedBitstream";
    case ErrorCode::NonCanonicalPadding: return "NonCanonicalPadding";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::SizeTooSmall: return "SizeTooSmall";
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::NotThreeStrata: return "NotThreeStrata";
    case ErrorCode::BlockSumViolation: return "BlockSumViolation";
    case ErrorCode::JointDiagonalizationFailure: return "JointDiagonalizationFailure";
    case ErrorCode::NegativeDiscriminant: return "NegativeDiscriminant";
    case ErrorCode::SingularBlock: return "SingularBlock";
    case ErrorCode::DOutOfRange: return "DOutOfRange";
    case ErrorCode::EmptyOrFullSubset: return "EmptyOrFullSubset";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::CaseMismatch: return "CaseMismatch";
    case ErrorCode::MixedParameters: return "MixedParameters";
  }
  return "Unknown";
}

/// Domain error carrying a stable machine-readable code. The CLI prints
/// `error: <code>: <message>` and exits 1, so tests and scripts can match on
/// the code name.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  const char* code_name() const noexcept { return to_string(code_); }

 private:
  ErrorCode code_;
};

}  // namespace srgnet
