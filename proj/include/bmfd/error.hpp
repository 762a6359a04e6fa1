#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bmfd {

/// Failure categories surfaced by the library. The CLI prints the name of the
/// code verbatim, so these names are part of the command-line contract.
enum class ErrorCode {
  FileNotFound,
  UnsupportedFormat,
  CorruptImage,
  InvalidGrid,
  EmptyDataset,
  RaggedDataset,
  InvalidArgument,
  VolumeTooLarge,
  CurveTooShort,
  DegenerateFit,
  InvalidScale,
  ClassTooSmall,
  SingularCovariance,
  DimensionMismatch,
  LengthMismatch,
  InvalidFeature,
  InvalidConfig,
  IoError,
};

std::string_view code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bmfd
