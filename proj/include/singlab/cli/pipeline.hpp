/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "singlab/error.hpp"
#include "singlab/hodgeforms/binding.hpp"
#include "singlab/newtonspec/grading.hpp"
#include "singlab/nilstruct/weight_filtration.hpp"
#include "singlab/respair/residue.hpp"

namespace singlab {

enum class SpectrumMethod { Auto, Newton, QuasiHomogeneous, ThomSebastiani, External };

struct RunConfig {
  std::string polynomial;
  std::vector<std::string> vars;
  SpectrumMethod method = SpectrumMethod::Auto;
  std::vector<Rational> weights;
  std::vector<std::string> summands;
  std::string external_path;
  bool full_checks = false;

  /// Parses "auto", "newton", "qh:w1,w2,..", "ts:f1;f2;..", "external:path".
  /// Throws InvalidConfig.
  void set_spectrum(const std::string& spec);
  std::string spectrum_str() const;
};

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct Analysis {
  RunConfig config;
  MultiPoly f;
  int n = 0;
  std::size_t mu = 0;
  std::size_t tau = 0;
  QuotientAlgebra qa;
  Matrix mf;
  JordanData mf_jordan;
  unsigned mf_index = 0;
  WeightFiltration wf;
  std::map<int, std::vector<std::pair<int, std::size_t>>> primitive;

  ResidueFunctional residue;
  Matrix b0;
  /// rank B_j for j = 0 .. nilpotency index.
  std::vector<std::size_t> pairing_ranks;

  std::string spectrum_route;
  SpectrumData spectrum;
  std::vector<std::size_t> kappa;
  TwistedMatrix s, q, j;
  JSignReport j_signs;

  /// Everything below needs a grading of A_f; absent for external spectra.
  bool graded = false;
  std::string graded_note;
  GradedBasis gbasis;
  GradedOperator gop;
  AdaptedBasis adapted;
  /// Columns: adapted vectors in standard-basis coordinates.
  Matrix adapted_to_standard;
  Matrix mf_adapted;
  NSplit split;
  BindingReport binding;
  std::vector<Matrix> pairing_adapted;  // j = 0 .. n+1
  std::vector<MainTheoremCheck> theorem;

  std::vector<CheckResult> checks;
  std::map<std::string, double> timings;

  bool all_checks_pass() const;
};

Analysis analyze(const RunConfig& config);

/// Remediation hint for an error code.
std::string error_hint(ErrorCode code);
/// Process exit code for an error: 2 input, 3 refused, 4 verification.
int exit_code_for(ErrorCode code);

}  // namespace singlab
