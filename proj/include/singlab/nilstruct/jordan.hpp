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

#include "singlab/polycore/matrix.hpp"

namespace singlab {

/// Block size -> number of Jordan blocks of that size.
using JordanType = std::map<std::size_t, std::size_t>;

std::string jordan_type_str(const JordanType& t);
std::size_t jordan_type_dim(const JordanType& t);

/// Smallest k with M^k = 0. Throws NotNilpotent when M^dim != 0.
unsigned nilpotency_index(const Matrix& m);

/// Jordan type read off the rank profile of the powers of M.
JordanType jordan_type_from_ranks(const Matrix& m);

struct JordanData {
  Matrix op;
  /// chains[c][k] = M^k applied to the seed of chain c; M kills the last one.
  std::vector<std::vector<Vec>> chains;
  JordanType type;
  /// Flattened basis ordered by (weight, chain index).
  std::vector<Vec> basis;
  /// Weight -m + 2k - 1 of the k-th (1-based) vector of a chain of size m.
  std::vector<int> weights;
  /// (chain, step) of each flattened basis vector.
  std::vector<std::pair<std::size_t, std::size_t>> position;
  /// nu[j] = index of M * basis[j] in the flattened basis, if nonzero.
  std::vector<std::optional<std::size_t>> nu;
  /// Columns are the flattened basis vectors.
  Matrix adapted_basis_matrix;

  /// Largest chain size minus one.
  int m0() const;
};

/// Greedy longest-chain-first construction. Among admissible seeds the one
/// whose primitive integer coordinate vector is lexicographically smallest
/// is taken. With a grading, M must map each graded piece into a single
/// graded piece and seeds are chosen homogeneous.
JordanData jordan_chains(const Matrix& m, const std::vector<Rational>* grading = nullptr);

}  // namespace singlab
