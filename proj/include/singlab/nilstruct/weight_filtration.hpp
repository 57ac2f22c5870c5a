/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "singlab/nilstruct/jordan.hpp"
#include "singlab/polycore/matrix.hpp"

namespace singlab {

/// Decreasing weight filtration of a nilpotent operator M with M^{m0+1} = 0:
/// W_{-m0} is everything, W_{m0+1} = 0 and M W_j lies in W_{j+2}.
struct WeightFiltration {
  int m0 = 0;
  /// flags[j] for j = -m0 .. m0+1.
  std::map<int, Subspace> flags;
  std::map<int, std::size_t> graded_dims;
  /// Prim_j for j <= 0: kernel of M^{-j+1} : Gr_j -> Gr_{-j+2}.
  std::map<int, std::size_t> primitive_dims;

  const Subspace& at(int j) const;
};

/// Intrinsic construction: W_{m} = Im M^m and W_{-m+1} = Ker M^m, then the
/// same on the induced operator of Ker M^m / Im M^m, recursively.
WeightFiltration weight_filtration(const Matrix& m);

/// Intrinsic construction cross-checked against the span of chain vectors of
/// weight >= j; throws Internal if they differ.
WeightFiltration weight_filtration(const JordanData& jd);

/// Filtration spanned by chain vectors of weight >= j.
std::map<int, Subspace> chain_weight_flags(const JordanData& jd);

/// For each j: list of (k, dim M^k Prim_{j-2k}) over the summands of Gr_j.
std::map<int, std::vector<std::pair<int, std::size_t>>> primitive_decomposition(const WeightFiltration& wf,
                                                                                const Matrix& m);

/// Same dimension data for the increasing convention W'_j = W_{-j}.
std::map<int, std::size_t> increasing_graded_dims(const WeightFiltration& wf);

}  // namespace singlab
