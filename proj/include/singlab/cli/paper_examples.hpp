/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace singlab {

struct GoldenOutcome {
  std::string example;
  std::string quantity;
  bool ok = false;
  std::string expected;
  std::string actual;
};

/// The golden file compiled into the binary.
const nlohmann::json& embedded_golden();

/// Runs every example and the join fixture against the golden data. Each
/// compared quantity yields one outcome; a thrown error yields a failed
/// "run" outcome.
std::vector<GoldenOutcome> verify_paper_examples(const nlohmann::json& golden);

bool all_ok(const std::vector<GoldenOutcome>& outcomes);

}  // namespace singlab
