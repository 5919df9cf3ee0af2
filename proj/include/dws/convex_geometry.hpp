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

#include <array>
#include <vector>

#include "json.hpp"

#include "dws/types.hpp"

// Polytopal convex bodies in dimensions 1-3: the hull of the support of the
// initial datum, its nearest-point structure and the normal bundle.

namespace dws
{
/// Boundary point with a unit outward normal; K lies in {y : (y - xi).nu <= 0}.
struct NormalPoint
{
    Vec xi = Vec::Zero();
    Vec nu = Vec::Zero();
};

struct HullProjection
{
    double rho = 0.0;      // distance to the body, zero inside
    Vec xi = Vec::Zero();  // nearest point of the body
    Vec nu = Vec::Zero();  // (x - xi) / rho, zero when rho == 0
    bool has_normal = false;
};

class ConvexPolytope
{
public:
    /// Hull of a finite point set. Degenerate (flat) sets are rejected.
    static ConvexPolytope hull_of(int n, const std::vector<Vec>& points);

    int dimension() const { return n_; }
    /// 1-D: {a, b}; 2-D: counterclockwise; 3-D: unordered.
    const std::vector<Vec>& vertices() const { return vertices_; }
    /// 3-D triangles, counterclockwise seen from outside.
    const std::vector<std::array<int, 3>>& faces() const { return faces_; }

    bool contains(const Vec& x, double tol = 0.0) const;
    /// max over vertices of v.nu; `index` receives the first maximizer.
    double support(const Vec& nu, int* index = nullptr) const;
    double diameter() const;
    Vec vertex_centroid() const;

private:
    int n_ = 0;
    std::vector<Vec> vertices_;
    std::vector<std::array<int, 3>> faces_;
    // Facet inequalities normal.y <= offset.
    std::vector<Vec> facet_normals_;
    std::vector<double> facet_offsets_;
};

HullProjection distance_to_hull(const ConvexPolytope& K, const Vec& x);

/// Quasi-uniform unit vectors: +-1 in 1-D, equal angles in 2-D, a
/// Fibonacci lattice in 3-D.
std::vector<Vec> sphere_directions(int n, int count);

std::vector<NormalPoint> sample_normal_bundle(const ConvexPolytope& K, int count);

Vec phi_map(const Vec& xi, const Vec& nu, double rho);

struct NormalCoordinates
{
    Vec xi = Vec::Zero();
    Vec nu = Vec::Zero();
    double rho = 0.0;
};

/// Inverse of phi_map on the complement of K; throws for points of K.
NormalCoordinates phi_inverse(const ConvexPolytope& K, const Vec& x);

/// Whether B_{rho/2}(i) sits inside every shifted half-space
/// nu_-^perp + xi - (rho/2) nu over the sampled normal bundle.
bool inscribed_ball_containment(const ConvexPolytope& K, const Vec& i, double rho, double tol,
                                int directions = 256);

void to_json(nlohmann::json& j, const ConvexPolytope& K);

}  // namespace dws
