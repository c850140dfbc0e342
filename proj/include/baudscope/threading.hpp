// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 baudscope contributors

#pragma once

#include <cstdint>
#include <functional>

namespace baudscope {

/// Worker count: BAUDSCOPE_THREADS when set (min 1), else hardware
/// concurrency.
int worker_thread_count();

/// Runs body(i) for i in [0, n). Work is chunked across workers; any
/// exception is rethrown on the calling thread. Callers must make results
/// index-addressed so the outcome is independent of scheduling.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& body);

}  // namespace baudscope
