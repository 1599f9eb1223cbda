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

#pragma once

#include <functional>

namespace geopose {

// Upper bound on worker threads for the raster kernels. Every kernel in this
// library produces output that is bit-identical for any thread count; the
// bound only controls resource usage. n < 1 is clamped to 1.
void set_max_threads(int n);
int max_threads();

// Runs fn(begin_row, end_row) over contiguous chunks of [begin, end).
// Chunk boundaries depend only on the range, never on scheduling, and each
// chunk writes a disjoint slice, so results do not depend on thread count.
// The first exception thrown by any chunk is rethrown to the caller.
void parallel_chunks(int begin, int end, const std::function<void(int, int)>& fn);

} // namespace geopose
