// Copyright 2026 The wignerkit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wignerkit {

enum class ErrorCode {
  InvalidArgument,
  ZeroVector,
  DimMismatch,
  DimTooSmall,
  NotInSpan,
  NonOrthonormalFrame,
  CutLocus,
  BaseMismatch,
  StepOutOfRange,
  NotUnitary,
  NormDeviation,
  Ambiguous,
  NonUnitary,
  NotASymmetry,
  NotAHomomorphism,
  NotProjective,
  InvalidGroup,
};

std::string_view to_string(ErrorCode code);

/// The single exception type thrown by the library. `stage()` is set for
/// NotASymmetry and names the lift pipeline step that rejected the input.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string stage = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& stage() const noexcept { return stage_; }

 private:
  ErrorCode code_;
  std::string stage_;
};

}  // namespace wignerkit
