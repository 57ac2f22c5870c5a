/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <functional>

namespace singlab {

/// Worker count: SINGLAB_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t thread_budget();

/// Runs body(i) for i in [0, count) on up to thread_budget() threads. The
/// first exception thrown by any worker is rethrown after all join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace singlab
