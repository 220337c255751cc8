#pragma once

#include <stdexcept>
#include <string>

namespace sunisb {

enum class ErrorCode {
  InvalidRank,
  InvalidMode,
  RankMismatch,
  MixedEigenvalue,
  IndexOutOfRange,
  InvalidConstraintPair,
  SingularCoefficient,
  InvalidIrrep,
  ShapeMismatch,
  ConstructionFailure,
  DependentStates,
  NonInvariantSubspace,
  NonOrthonormal,
  InvalidSpin,
  ZeroState,
  Parse,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidRank: return "invalid-rank";
    case ErrorCode::InvalidMode: return "invalid-mode";
    case ErrorCode::RankMismatch: return "rank-mismatch";
    case ErrorCode::MixedEigenvalue: return "mixed-eigenvalue";
    case ErrorCode::IndexOutOfRange: return "index-out-of-range";
    case ErrorCode::InvalidConstraintPair: return "invalid-constraint-pair";
    case ErrorCode::SingularCoefficient: return "singular-coefficient";
    case ErrorCode::InvalidIrrep: return "invalid-irrep";
    case ErrorCode::ShapeMismatch: return "shape-mismatch";
    case ErrorCode::ConstructionFailure: return "construction-failure";
    case ErrorCode::DependentStates: return "dependent-states";
    case ErrorCode::NonInvariantSubspace: return "non-invariant-subspace";
    case ErrorCode::NonOrthonormal: return "non-orthonormal";
    case ErrorCode::InvalidSpin: return "invalid-spin";
    case ErrorCode::ZeroState: return "zero-state";
    case ErrorCode::Parse: return "parse-error";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sunisb
