/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "singlab/localalg/staircase.hpp"

#include <algorithm>
#include <limits>

#include "singlab/error.hpp"

namespace singlab {

namespace {

std::vector<unsigned> pure_power_bounds(const std::vector<Monomial>& leads, std::size_t nvars) {
  std::vector<unsigned> bound(nvars, std::numeric_limits<unsigned>::max());
  for (const auto& m : leads) {
    std::size_t support = 0;
    std::size_t var = 0;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (m[i] != 0) {
        ++support;
        var = i;
      }
    }
    if (support == 0) {
      std::fill(bound.begin(), bound.end(), 0u);
      return bound;
    }
    if (support == 1) bound[var] = std::min(bound[var], m[var]);
  }
  return bound;
}

}  // namespace

std::optional<std::size_t> variable_without_pure_power(const std::vector<Monomial>& leads, std::size_t nvars) {
  const auto bound = pure_power_bounds(leads, nvars);
  for (std::size_t i = 0; i < nvars; ++i) {
    if (bound[i] == std::numeric_limits<unsigned>::max()) return i;
  }
  return std::nullopt;
}

bool staircase_is_finite(const std::vector<Monomial>& leads, std::size_t nvars) {
  return !variable_without_pure_power(leads, nvars).has_value();
}

std::vector<Monomial> staircase(const std::vector<Monomial>& leads, std::size_t nvars) {
  const auto bound = pure_power_bounds(leads, nvars);
  if (variable_without_pure_power(leads, nvars)) {
    throw Error(ErrorCode::NotIsolated, "localalg", "staircase is unbounded");
  }
  std::vector<Monomial> out;
  if (std::any_of(bound.begin(), bound.end(), [](unsigned b) { return b == 0; })) return out;
  Monomial m(nvars);
  // Odometer over the box below the pure powers.
  while (true) {
    const bool standard = std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
    if (standard) out.push_back(m);
    std::size_t i = 0;
    while (i < nvars) {
      if (m[i] + 1 < bound[i]) {
        m.set(i, m[i] + 1);
        break;
      }
      m.set(i, 0);
      ++i;
    }
    if (i == nvars) break;
  }
  std::sort(out.begin(), out.end(), LocalDescending{});
  return out;
}

}  // namespace singlab
