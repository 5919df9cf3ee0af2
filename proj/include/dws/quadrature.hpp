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

#include <vector>

#include "dws/types.hpp"

namespace dws
{
struct GaussRule
{
    std::vector<double> nodes;    // on [-1, 1], ascending
    std::vector<double> weights;
};

/// Gauss-Legendre rule of the given order. Rules are computed once and
/// cached; the returned reference stays valid for the program lifetime.
const GaussRule& gauss_legendre(int order);

struct PolarOrders
{
    int radial = 64;
    int angular = 64;
    int azimuthal = 16;

    PolarOrders doubled() const { return {2 * radial, 2 * angular, 2 * azimuthal}; }
};

/// Direction on the unit sphere with its surface weight.
struct SphereNode
{
    Vec theta;
    double w = 0.0;
};

/// Radius with two weights: `w` for d(rho) and `w_sing` for
/// d(rho) / sqrt(rho_max^2 - rho^2). Both come from the substitution
/// rho = rho_max sin(phi), which also keeps the kernel arguments smooth.
struct RadialNode
{
    double rho = 0.0;
    double w = 0.0;
    double w_sing = 0.0;
};

/// Directions theta in S^{n-1} for which x + rho theta lies in the open
/// ball B_R(c). The cap is laid out around the direction from x to c so
/// that no node is wasted outside the support.
void cap_nodes(int n, const Vec& x, const Vec& c, double R, double rho, const PolarOrders& orders,
               std::vector<SphereNode>& out);

/// Radii in [0, rho_max] at which the sphere S_rho(x) meets B_R(c), where
/// D = |x - c|. Split at R - D when x lies inside the ball. Empty when the
/// two sets do not meet.
void radial_nodes(double D, double R, double rho_max, int order, std::vector<RadialNode>& out);

}  // namespace dws
