#include "psts/error.hpp"

namespace psts {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::DuplicateLine: return "DuplicateLine";
    case ErrorCode::LineNotTriple: return "LineNotTriple";
    case ErrorCode::UnknownPointInLine: return "UnknownPointInLine";
    case ErrorCode::TwoPointsOnTwoLines: return "TwoPointsOnTwoLines";
    case ErrorCode::InvalidLabel: return "InvalidLabel";
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::PointsNotSubset: return "PointsNotSubset";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::FileError: return "FileError";
    case ErrorCode::SizeTooSmall: return "SizeTooSmall";
    case ErrorCode::NotBinomial: return "NotBinomial";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotDisjoint: return "NotDisjoint";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::AxisIndexMismatch: return "AxisIndexMismatch";
    case ErrorCode::XiNotInvolutivePair: return "XiNotInvolutivePair";
    case ErrorCode::XiDiagonalNotIdentity: return "XiDiagonalNotIdentity";
    case ErrorCode::TooManySubgraphs: return "TooManySubgraphs";
    case ErrorCode::EnumerationNotComplete: return "EnumerationNotComplete";
    case ErrorCode::AxisTooSmall: return "AxisTooSmall";
    case ErrorCode::NotExactlyTwo: return "NotExactlyTwo";
    case ErrorCode::NoAdmissiblePair: return "NoAdmissiblePair";
    case ErrorCode::CertificateStale: return "CertificateStale";
    case ErrorCode::AxiomViolation: return "AxiomViolation";
    case ErrorCode::NotDistinct: return "NotDistinct";
    case ErrorCode::SharedVertexNotUnique: return "SharedVertexNotUnique";
    case ErrorCode::StructureViolation: return "StructureViolation";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::WitnessGap: return "WitnessGap";
    case ErrorCode::PropertyFailure: return "PropertyFailure";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

}  // namespace psts
