// Copyright 2026 The qptlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace qptlab {

/// Worker cap: QPTLAB_THREADS when set, hardware concurrency otherwise.
inline int worker_count() {
    if (const char* env = std::getenv("QPTLAB_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Runs body(i) for i in [0, count) on a worker pool. Every task must write
/// only to its own index-addressed slot; results are then independent of the
/// scheduling order.
inline void parallel_for(size_t count, const std::function<void(size_t)>& body,
                         int threads = 0) {
    if (threads <= 0) threads = worker_count();
    if (threads == 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::vector<std::thread> pool;
    auto run = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= count || failed.load()) return;
            try {
                body(i);
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
                return;
            }
        }
    };
    size_t n_workers = std::min<size_t>(threads, count);
    pool.reserve(n_workers);
    for (size_t t = 0; t < n_workers; ++t) pool.emplace_back(run);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace qptlab
