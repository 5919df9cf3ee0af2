// Copyright 2026 The dwspots Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <vector>

#include "dws/solution.hpp"

// Data-parallel maps over independent evaluations. The serial path is the
// reference the parallel one is tested against.

namespace dws
{
enum class Execution
{
    serial,
    parallel
};

/// Apply `fn` to 0..count-1. Results keep index order; the first exception
/// by index is rethrown after the loop.
template <class T>
std::vector<T> parallel_map(std::size_t count, const std::function<T(std::size_t)>& fn,
                            Execution mode = Execution::parallel)
{
    std::vector<T> out(count);
    if (mode == Execution::serial) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::exception_ptr> errors(count);
    const long long n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i) {
        try {
            out[std::size_t(i)] = fn(std::size_t(i));
        } catch (...) {
            errors[std::size_t(i)] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

std::vector<FieldSample> evaluate_points(const SolutionEvaluator& ev, const std::vector<Vec>& points, double t,
                                         const EvalRequest& request = {}, Execution mode = Execution::parallel);

/// Tensor grid with `counts[a]` nodes from lower[a] to upper[a] on each of
/// the first n axes; x varies slowest.
std::vector<Vec> tensor_grid(int n, const Vec& lower, const Vec& upper, const std::vector<int>& counts);

int worker_threads();

}  // namespace dws
