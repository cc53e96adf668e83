// Copyright 2026 The dhlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dhlab/errors.hpp"

namespace dhlab {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::InsufficientBPlus: return "InsufficientBPlus";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotQuadratic: return "NotQuadratic";
    case ErrorCode::InternalDivisionInexact: return "InternalDivisionInexact";
    case ErrorCode::NegativeBetti: return "NegativeBetti";
    case ErrorCode::NonIntegralBPlus: return "NonIntegralBPlus";
    case ErrorCode::IllegalStratum: return "IllegalStratum";
    case ErrorCode::EmptyLambda: return "EmptyLambda";
    case ErrorCode::CertificateFailed: return "CertificateFailed";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::NoEpsilonFound: return "NoEpsilonFound";
    case ErrorCode::NonPositiveDensity: return "NonPositiveDensity";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace dhlab
