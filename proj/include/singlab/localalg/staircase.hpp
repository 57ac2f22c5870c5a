/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "singlab/polycore/monomial.hpp"

namespace singlab {

/// First variable with no pure power among the leading monomials.
std::optional<std::size_t> variable_without_pure_power(const std::vector<Monomial>& leads, std::size_t nvars);

bool staircase_is_finite(const std::vector<Monomial>& leads, std::size_t nvars);

/// Monomials divisible by no leading monomial, sorted descending in
/// LocalOrder (so the unit comes first). Requires a finite staircase.
std::vector<Monomial> staircase(const std::vector<Monomial>& leads, std::size_t nvars);

}  // namespace singlab
