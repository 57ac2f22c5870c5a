/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <vector>

#include "singlab/polycore/poly.hpp"

namespace singlab {

struct MacaulayResult {
  unsigned truncation = 0;
  std::size_t mu = 0;
  /// Standard monomials of I + m^K, descending in LocalOrder.
  std::vector<Monomial> basis;
  bool stabilized = false;
};

/// dim of O/(I + m^K) by row reduction of the matrix whose rows are m * g
/// for every generator g and monomial m of degree < K, truncated below K.
MacaulayResult macaulay_oracle(const std::vector<MultiPoly>& gens, unsigned truncation);
MacaulayResult macaulay_oracle(const MultiPoly& f, unsigned truncation);

/// Increases K from 1 until the staircase is closed (no standard monomial
/// of degree K - 1) and mu_K = mu_{K+1}; gives up after max_truncation.
MacaulayResult macaulay_stabilized(const std::vector<MultiPoly>& gens, unsigned max_truncation);

}  // namespace singlab
