#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace psts {

enum class ErrorCode {
  // configuration axioms and input
  DuplicatePoint,
  DuplicateLine,
  LineNotTriple,
  UnknownPointInLine,
  TwoPointsOnTwoLines,
  InvalidLabel,
  UnknownPoint,
  PointsNotSubset,
  SyntaxError,
  FileError,
  // constructions
  SizeTooSmall,
  NotBinomial,
  SizeMismatch,
  NotDisjoint,
  NotBijective,
  AxisIndexMismatch,
  XiNotInvolutivePair,
  XiDiagonalNotIdentity,
  // transforms
  TooManySubgraphs,
  EnumerationNotComplete,
  AxisTooSmall,
  NotExactlyTwo,
  NoAdmissiblePair,
  CertificateStale,
  AxiomViolation,
  // analysis
  NotDistinct,
  SharedVertexNotUnique,
  StructureViolation,
  OutOfRange,
  // verification
  WitnessGap,
  PropertyFailure,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Domain error raised by every library operation. `what()` reads
/// "<ErrorName>: <detail>" so the CLI can forward it unchanged.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace psts
