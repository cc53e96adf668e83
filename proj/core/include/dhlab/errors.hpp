// Copyright 2026 The dhlab Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace dhlab {

enum class ErrorCode {
  DimensionMismatch,
  NotPositive,
  InsufficientBPlus,
  ZeroVector,
  NotQuadratic,
  InternalDivisionInexact,
  NegativeBetti,
  NonIntegralBPlus,
  IllegalStratum,
  EmptyLambda,
  CertificateFailed,
  InternalInconsistency,
  NoEpsilonFound,
  NonPositiveDensity,
  ParseError,
};

const char* error_code_name(ErrorCode code);

/// All domain-level failures carry a stable code so that callers (tests,
/// the CLI exit-code mapping) can dispatch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dhlab
