#include "bmfd/error.hpp"

namespace bmfd {

std::string_view code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::CorruptImage: return "CorruptImage";
    case ErrorCode::InvalidGrid: return "InvalidGrid";
    case ErrorCode::EmptyDataset: return "EmptyDataset";
    case ErrorCode::RaggedDataset: return "RaggedDataset";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::VolumeTooLarge: return "VolumeTooLarge";
    case ErrorCode::CurveTooShort: return "CurveTooShort";
    case ErrorCode::DegenerateFit: return "DegenerateFit";
    case ErrorCode::InvalidScale: return "InvalidScale";
    case ErrorCode::ClassTooSmall: return "ClassTooSmall";
    case ErrorCode::SingularCovariance: return "SingularCovariance";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::InvalidFeature: return "InvalidFeature";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace bmfd
