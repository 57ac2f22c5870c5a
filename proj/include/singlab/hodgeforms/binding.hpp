/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "singlab/hodgeforms/hodge.hpp"
#include "singlab/nilstruct/jordan.hpp"

namespace singlab {

/// Maximal run of an f-chain whose steps advance the principal grade by
/// exactly 1.
struct ChainSegment {
  /// Positions along the f-chain.
  std::vector<std::size_t> steps;
  /// Principal grade of each vector in the run.
  std::vector<Rational> grades;
  /// N-chains (indices into BindingReport::n_jordan.chains) supporting the
  /// principal part of the first vector.
  std::vector<std::size_t> n_chains;
};

struct FChainBinding {
  std::size_t length = 0;
  std::vector<ChainSegment> segments;
};

struct BindingReport {
  JordanData f_jordan;
  JordanData n_jordan;
  std::vector<FChainBinding> chains;
  /// Steps carried entirely by N_1.
  std::size_t binding_steps = 0;
  /// Inside each segment the principal part of the next vector is N_top of
  /// the principal part of the previous one.
  bool consistent = true;
};

/// Principal part: the coordinates of lowest grade among the nonzero ones.
Vec principal_part(const Vec& v, const std::vector<Rational>& grading);

BindingReport bind_chains(const NSplit& split, const std::vector<Rational>& grading);

/// N-chain map on spectral indices: chain vectors of the graded operator
/// sorted by grade; entry j is the index of N applied to vector j.
std::vector<std::optional<std::size_t>> spectral_chain_map(const JordanData& n_jordan,
                                                           const std::vector<Rational>& grading);

}  // namespace singlab
