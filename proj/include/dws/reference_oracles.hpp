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

#include <iosfwd>
#include <vector>

#include "dws/initial_data.hpp"

// Independent solvers for u_tt - Lap u + u_t = 0, u(0) = f, u_t(0) = -f,
// used to validate the closed-form evaluator.

namespace dws
{
enum class OracleScheme
{
    finite_difference_1d,
    spectral_torus
};

struct OracleRun
{
    OracleScheme scheme = OracleScheme::finite_difference_1d;
    int n = 1;
    int points = 0;           // per axis
    double half_width = 0.0;  // grid covers [-L, L] (FD) or the torus [-L, L)
    double dx = 0.0;
    double dt = 0.0;          // zero for the spectral scheme
    double T = 0.0;
    int steps = 0;
    std::vector<double> field;  // index ((i * points) + j) * points + k

    double coordinate(int i) const { return -half_width + i * dx; }
    double at(int i, int j = 0, int k = 0) const;
    Vec node(int i, int j = 0, int k = 0) const;
    /// Nearest grid index to coordinate value v along any axis.
    int index_of(double v) const;
    double max_abs() const;
};

/// Leapfrog with centred damping on [-L, L], homogeneous Dirichlet ends.
/// L defaults to a width the solution cannot reach by time T.
OracleRun fd_solve_1d(const InitialDatum& datum, double T, double dx, double dt, double half_width = 0.0);

/// Exact evolution of each Fourier mode of the sampled datum on the torus
/// [-L, L)^n with `modes` points per axis.
OracleRun spectral_solve(const InitialDatum& datum, double T, double half_width, int modes);

/// Closed-form evolution factor of a single Fourier mode with |k|^2 = k2
/// and initial data (1, -1).
double mode_evolution(double k2, double t);

/// CSV snapshot of every `stride`-th grid node.
void write_snapshot_csv(const OracleRun& run, std::ostream& out, int stride = 1);

}  // namespace dws
