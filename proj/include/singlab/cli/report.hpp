/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <string>

#include <json.hpp>

#include "singlab/cli/pipeline.hpp"

namespace singlab {

inline constexpr const char* kReportSchema = "singlab.report/1";
/// Matrices above this size appear in JSON only; text shows their support size.
inline constexpr std::size_t kTextMatrixLimit = 30;

/// Deterministic except for the "timings" member.
nlohmann::json report_json(const Analysis& a);
/// {"schema", "error": {code, module, message, hint}, "exit_code"}.
nlohmann::json error_json(const Error& e);

/// Renders every member of a report; matrices larger than kTextMatrixLimit
/// are summarized.
std::string report_text(const nlohmann::json& report);

/// Sparse matrix as [[i, j, "p/q"], ...] and back.
nlohmann::json sparse_json(const Matrix& m);
Matrix sparse_from_json(const nlohmann::json& j, std::size_t rows, std::size_t cols);
nlohmann::json sparse_json(const TwistedMatrix& m);

}  // namespace singlab
