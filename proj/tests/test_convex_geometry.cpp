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


#include <cmath>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "dws/convex_geometry.hpp"

using namespace dws;

namespace
{
ConvexPolytope unit_square()
{
    return ConvexPolytope::hull_of(2, {Vec(0, 0, 0), Vec(1, 0, 0), Vec(1, 1, 0), Vec(0, 1, 0), Vec(0.5, 0.5, 0)});
}

ConvexPolytope random_polygon(std::mt19937_64& rng, int m)
{
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::vector<Vec> pts;
    for (int i = 0; i < m; ++i) pts.emplace_back(u(rng), u(rng), 0.0);
    return ConvexPolytope::hull_of(2, pts);
}

ConvexPolytope random_polytope3(std::mt19937_64& rng, int m)
{
    std::normal_distribution<double> g;
    std::vector<Vec> pts;
    for (int i = 0; i < m; ++i) pts.push_back(Vec(g(rng), g(rng), g(rng)).normalized() * (1.0 + 0.3 * std::abs(g(rng))));
    return ConvexPolytope::hull_of(3, pts);
}
}  // namespace

TEST(Hull, SquareBasics)
{
    const ConvexPolytope K = unit_square();
    EXPECT_EQ(K.vertices().size(), 4u);
    EXPECT_TRUE(K.contains(Vec(0.5, 0.2, 0)));
    EXPECT_FALSE(K.contains(Vec(1.1, 0.2, 0)));
    EXPECT_TRUE(K.contains(Vec(1.05, 0.2, 0), 0.1));
    EXPECT_NEAR(K.diameter(), std::sqrt(2.0), 1e-15);
    EXPECT_THROW(ConvexPolytope::hull_of(2, {Vec(0, 0, 0), Vec(1, 1, 0), Vec(2, 2, 0)}), std::invalid_argument);
}

TEST(Hull, SupportTiesUseLowestIndex)
{
    const ConvexPolytope K = unit_square();
    int first = -1;
    K.support(Vec(1, 0, 0), &first);
    int lowest = -1;
    for (int i = 0; i < int(K.vertices().size()); ++i)
        if (K.vertices()[i][0] == 1.0) {
            lowest = i;
            break;
        }
    EXPECT_EQ(first, lowest);
}

TEST(Distance, SquareExamples)
{
    const ConvexPolytope K = unit_square();
    HullProjection p = distance_to_hull(K, Vec(3, 0.5, 0));
    EXPECT_NEAR(p.rho, 2.0, 1e-14);
    EXPECT_NEAR((p.xi - Vec(1, 0.5, 0)).norm(), 0.0, 1e-14);
    EXPECT_NEAR((p.nu - Vec(1, 0, 0)).norm(), 0.0, 1e-14);
    p = distance_to_hull(K, Vec(2, 2, 0));
    EXPECT_NEAR(p.rho, std::sqrt(2.0), 1e-14);
    EXPECT_NEAR((p.xi - Vec(1, 1, 0)).norm(), 0.0, 1e-14);
    p = distance_to_hull(K, Vec(0.3, 0.3, 0));
    EXPECT_EQ(p.rho, 0.0);
    EXPECT_FALSE(p.has_normal);
}

TEST(Distance, OneLipschitz)
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-6, 6);
    for (int dim : {2, 3}) {
        const ConvexPolytope K = dim == 2 ? random_polygon(rng, 12) : random_polytope3(rng, 40);
        for (int k = 0; k < 300; ++k) {
            const Vec a = truncate(Vec(u(rng), u(rng), u(rng)), dim), b = truncate(Vec(u(rng), u(rng), u(rng)), dim);
            EXPECT_LE(std::abs(distance_to_hull(K, a).rho - distance_to_hull(K, b).rho), (a - b).norm() + 1e-12);
        }
    }
}

TEST(Distance, MatchesBruteForceIn3D)
{
    std::mt19937_64 rng(6);
    const ConvexPolytope K = random_polytope3(rng, 30);
    std::uniform_real_distribution<double> u(-4, 4);
    for (int k = 0; k < 50; ++k) {
        const Vec x(u(rng), u(rng), u(rng));
        const HullProjection p = distance_to_hull(K, x);
        if (p.rho == 0) {
            EXPECT_TRUE(K.contains(x, 1e-12));
            continue;
        }
        // Nearest point is on K and the half-space through it separates x.
        EXPECT_TRUE(K.contains(p.xi, 1e-9));
        EXPECT_LE(K.support(p.nu) - p.xi.dot(p.nu), 1e-9);
        EXPECT_NEAR((x - p.xi).norm(), p.rho, 1e-12);
    }
}

TEST(NormalBundle, IntervalAndHalfSpaceProperty)
{
    const ConvexPolytope I = ConvexPolytope::hull_of(1, {Vec(-1, 0, 0), Vec(2, 0, 0), Vec(0.5, 0, 0)});
    const auto b1 = sample_normal_bundle(I, 2);
    ASSERT_EQ(b1.size(), 2u);
    EXPECT_EQ(b1[0].xi[0], 2.0);
    EXPECT_EQ(b1[0].nu[0], 1.0);
    EXPECT_EQ(b1[1].xi[0], -1.0);
    EXPECT_EQ(b1[1].nu[0], -1.0);

    std::mt19937_64 rng(7);
    for (int dim : {2, 3}) {
        const ConvexPolytope K = dim == 2 ? random_polygon(rng, 15) : random_polytope3(rng, 50);
        for (const NormalPoint& np : sample_normal_bundle(K, dim == 2 ? 64 : 100)) {
            EXPECT_NEAR(np.nu.norm(), 1.0, 1e-14);
            for (const Vec& v : K.vertices()) EXPECT_LE((v - np.xi).dot(np.nu), 1e-9 * K.diameter());
        }
    }
    const auto sq = sample_normal_bundle(unit_square(), 4);
    for (const NormalPoint& np : sq)
        if (np.nu[0] > 0.999) { EXPECT_EQ(np.xi[0], 1.0); }
}

TEST(Phi, SquareExampleAndRejection)
{
    const ConvexPolytope K = unit_square();
    EXPECT_NEAR((phi_map(Vec(1, 0.5, 0), Vec(1, 0, 0), 2.0) - Vec(3, 0.5, 0)).norm(), 0.0, 1e-15);
    EXPECT_THROW(phi_inverse(K, Vec(0.5, 0.5, 0)), std::invalid_argument);
}

TEST(Phi, RoundTripAndAnnulusMembership)
{
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0, 1);
    for (int poly = 0; poly < 20; ++poly) {
        const ConvexPolytope K = random_polygon(rng, 6 + poly);
        const auto& V = K.vertices();
        for (int k = 0; k < 50; ++k) {
            const std::size_t e = std::size_t(k) % V.size();
            const Vec a = V[e], b = V[(e + 1) % V.size()];
            const Vec d = (b - a).normalized();
            const Vec nu(d[1], -d[0], 0);
            const Vec xi = a + (0.02 + 0.96 * u(rng)) * (b - a);
            const double rho = 0.01 + 5 * u(rng);
            const Vec x = phi_map(xi, nu, rho);
            const NormalCoordinates back = phi_inverse(K, x);
            EXPECT_NEAR((back.xi - xi).norm(), 0.0, 1e-9);
            EXPECT_NEAR((back.nu - nu).norm(), 0.0, 1e-9);
            EXPECT_NEAR(back.rho, rho, 1e-9);
            EXPECT_NEAR(distance_to_hull(K, x).rho, rho, 1e-9);
        }
    }
}

TEST(Phi, SurjectiveOnAnnulusSamples)
{
    std::mt19937_64 rng(9);
    const ConvexPolytope K = random_polytope3(rng, 40);
    std::uniform_real_distribution<double> u(-5, 5);
    int tested = 0;
    for (int k = 0; k < 400; ++k) {
        const Vec x(u(rng), u(rng), u(rng));
        if (K.contains(x)) continue;
        const NormalCoordinates c = phi_inverse(K, x);
        EXPECT_NEAR((phi_map(c.xi, c.nu, c.rho) - x).norm(), 0.0, 1e-9);
        ++tested;
    }
    EXPECT_GT(tested, 100);
}

TEST(Phi, ParallelBodiesAreNested)
{
    // Points of K + r B along a normal ray stay at distance exactly s <= r.
    std::mt19937_64 rng(10);
    const ConvexPolytope K = random_polygon(rng, 10);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int k = 0; k < 200; ++k) {
        const Vec x(u(rng), u(rng), 0);
        const HullProjection p = distance_to_hull(K, x);
        if (!p.has_normal) continue;
        for (double f : {0.1, 0.5, 0.9}) EXPECT_NEAR(distance_to_hull(K, p.xi + f * p.rho * p.nu).rho, f * p.rho, 1e-9);
    }
}

TEST(InscribedBall, Examples)
{
    std::vector<Vec> circle;
    for (int i = 0; i < 256; ++i) circle.emplace_back(std::cos(2 * kPi * i / 256), std::sin(2 * kPi * i / 256), 0);
    const ConvexPolytope K = ConvexPolytope::hull_of(2, circle);
    const double tol = 1 - std::cos(kPi / 256) + 1e-6;
    EXPECT_TRUE(inscribed_ball_containment(K, Vec::Zero(), 1.0, tol));
    EXPECT_FALSE(inscribed_ball_containment(K, Vec(1, 0, 0), 0.5, tol));
}
