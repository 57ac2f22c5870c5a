/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "singlab/error.hpp"

namespace singlab {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "Syntax";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::NvarsMismatch: return "NvarsMismatch";
    case ErrorCode::NotSingular: return "NotSingular";
    case ErrorCode::NotIsolated: return "NotIsolated";
    case ErrorCode::SocleNotOneDimensional: return "SocleNotOneDimensional";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::DegeneratePairing: return "DegeneratePairing";
    case ErrorCode::NotConvenient: return "NotConvenient";
    case ErrorCode::DegenerateNewtonBoundary: return "DegenerateNewtonBoundary";
    case ErrorCode::WrongArity: return "WrongArity";
    case ErrorCode::NotQuasiHomogeneous: return "NotQuasiHomogeneous";
    case ErrorCode::SpectrumMismatch: return "SpectrumMismatch";
    case ErrorCode::InvalidSpectrum: return "InvalidSpectrum";
    case ErrorCode::FiltrationViolation: return "FiltrationViolation";
    case ErrorCode::GradingPairingClash: return "GradingPairingClash";
    case ErrorCode::NonDiagonalJ: return "NonDiagonalJ";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace singlab
