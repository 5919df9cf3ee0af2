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


#include "dws/sweeps.hpp"

#include <omp.h>

namespace dws
{
std::vector<FieldSample> evaluate_points(const SolutionEvaluator& ev, const std::vector<Vec>& points, double t,
                                         const EvalRequest& request, Execution mode)
{
    return parallel_map<FieldSample>(
        points.size(), [&](std::size_t i) { return ev.evaluate(points[i], t, request); }, mode);
}

std::vector<Vec> tensor_grid(int n, const Vec& lower, const Vec& upper, const std::vector<int>& counts)
{
    check_dimension(n);
    require(int(counts.size()) == n, "grid needs one node count per dimension");
    for (int c : counts) require(c >= 1, "grid node counts must be positive");
    auto coord = [&](int axis, int i) {
        return counts[axis] == 1 ? lower[axis] : lower[axis] + (upper[axis] - lower[axis]) * i / (counts[axis] - 1);
    };
    std::vector<Vec> pts;
    const int ny = n >= 2 ? counts[1] : 1, nz = n >= 3 ? counts[2] : 1;
    for (int i = 0; i < counts[0]; ++i)
        for (int j = 0; j < ny; ++j)
            for (int k = 0; k < nz; ++k) {
                Vec x = Vec::Zero();
                x[0] = coord(0, i);
                if (n >= 2) x[1] = coord(1, j);
                if (n >= 3) x[2] = coord(2, k);
                pts.push_back(x);
            }
    return pts;
}

int worker_threads() { return omp_get_max_threads(); }

}  // namespace dws
