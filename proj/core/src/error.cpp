// Copyright 2026 The wignerkit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "wignerkit/error.hpp"

namespace wignerkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::DimTooSmall: return "DimTooSmall";
    case ErrorCode::NotInSpan: return "NotInSpan";
    case ErrorCode::NonOrthonormalFrame: return "NonOrthonormalFrame";
    case ErrorCode::CutLocus: return "CutLocus";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::StepOutOfRange: return "StepOutOfRange";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NormDeviation: return "NormDeviation";
    case ErrorCode::Ambiguous: return "Ambiguous";
    case ErrorCode::NonUnitary: return "NonUnitary";
    case ErrorCode::NotASymmetry: return "NotASymmetry";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::NotProjective: return "NotProjective";
    case ErrorCode::InvalidGroup: return "InvalidGroup";
  }
  return "Unknown";
}

namespace {

std::string format(ErrorCode code, const std::string& message, const std::string& stage) {
  std::string out(to_string(code));
  if (!stage.empty()) out += " [" + stage + "]";
  out += ": " + message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::string stage)
    : std::runtime_error(format(code, message, stage)), code_(code), stage_(std::move(stage)) {}

}  // namespace wignerkit
