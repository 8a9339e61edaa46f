#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wavedim {

enum class ErrorCode {
  InvalidArgument,
  InvalidWaveform,
  FlatSignal,
  ZeroAbscissa,
  NegativeAbscissa,
  TooShort,
  SeriesTooShort,
  DegenerateFit,
  ZeroLength,
  NonPositiveLength,
  ZeroVariance,
  MissingVariance,
  StageTooLarge,
  NumericalBlowup,
  WindowTooLarge,
  LengthMismatch,
  TooFewBins,
  Parse,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidWaveform: return "InvalidWaveform";
    case ErrorCode::FlatSignal: return "FlatSignal";
    case ErrorCode::ZeroAbscissa: return "ZeroAbscissa";
    case ErrorCode::NegativeAbscissa: return "NegativeAbscissa";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::SeriesTooShort: return "SeriesTooShort";
    case ErrorCode::DegenerateFit: return "DegenerateFit";
    case ErrorCode::ZeroLength: return "ZeroLength";
    case ErrorCode::NonPositiveLength: return "NonPositiveLength";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::MissingVariance: return "MissingVariance";
    case ErrorCode::StageTooLarge: return "StageTooLarge";
    case ErrorCode::NumericalBlowup: return "NumericalBlowup";
    case ErrorCode::WindowTooLarge: return "WindowTooLarge";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::TooFewBins: return "TooFewBins";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// message is prefixed with the code name so it can be surfaced verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wavedim
