// Copyright (c) 2026 The geopose authors.
//
// This software is licensed under the Apache License, Version 2.0 (the "License").
// You may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0.
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "geopose/threading.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace geopose {

namespace {

    int default_threads()
    {
        unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(hw);
    }

    std::atomic<int> g_max_threads{0}; // 0 = not yet initialized

} // namespace

void set_max_threads(int n)
{
    g_max_threads.store(std::max(1, n));
}

int max_threads()
{
    int n = g_max_threads.load();
    if (n == 0) {
        n = default_threads();
        g_max_threads.store(n);
    }
    return n;
}

void parallel_chunks(int begin, int end, const std::function<void(int, int)>& fn)
{
    const int count = end - begin;
    if (count <= 0) {
        return;
    }
    const int workers = std::min(max_threads(), count);
    if (workers == 1 || count < 16) {
        fn(begin, end);
        return;
    }

    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto run = [&](int lo, int hi) {
        try {
            fn(lo, hi);
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) {
                first_error = std::current_exception();
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers) - 1);
    for (int w = 0; w < workers; ++w) {
        // Even split; the first (count % workers) chunks take one extra row.
        const int lo = begin + static_cast<int>((static_cast<long long>(count) * w) / workers);
        const int hi = begin + static_cast<int>((static_cast<long long>(count) * (w + 1)) / workers);
        if (w + 1 == workers) {
            run(lo, hi);
        } else {
            pool.emplace_back(run, lo, hi);
        }
    }
    for (auto& t : pool) {
        t.join();
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }
}

} // namespace geopose
