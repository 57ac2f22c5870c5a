/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace singlab {

enum class ErrorCode {
  Syntax,
  UnknownVariable,
  NvarsMismatch,
  NotSingular,
  NotIsolated,
  SocleNotOneDimensional,
  NotNilpotent,
  DegeneratePairing,
  NotConvenient,
  DegenerateNewtonBoundary,
  WrongArity,
  NotQuasiHomogeneous,
  SpectrumMismatch,
  InvalidSpectrum,
  FiltrationViolation,
  GradingPairingClash,
  NonDiagonalJ,
  InvalidConfig,
  Io,
  Internal,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library. `module()` names the component that
/// detected the problem so front ends can report provenance.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string module, const std::string& message)
      : std::runtime_error(message), code_(code), module_(std::move(module)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& module() const noexcept { return module_; }

 private:
  ErrorCode code_;
  std::string module_;
};

}  // namespace singlab
