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

#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace dws
{
/// Points and vectors are stored in R^3; components beyond the working
/// dimension are kept at zero.
using Vec = Eigen::Vector3d;
using Mat = Eigen::Matrix3d;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Raised when an adaptive numerical procedure fails its own refinement check.
class ConvergenceError : public std::runtime_error
{
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool condition, const char* message)
{
    if (!condition) throw std::invalid_argument(message);
}

inline void check_dimension(int n)
{
    require(n >= 1 && n <= 3, "spatial dimension must be 1, 2 or 3");
}

/// Zero the components of `v` beyond dimension `n`.
inline Vec truncate(Vec v, int n)
{
    for (int i = n; i < 3; ++i) v[i] = 0.0;
    return v;
}

}  // namespace dws
