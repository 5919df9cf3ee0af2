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
#include <numeric>

#include <gtest/gtest.h>

#include "dws/quadrature.hpp"

using namespace dws;

TEST(GaussLegendre, ExactForPolynomials)
{
    for (int order : {1, 2, 5, 16, 64, 128}) {
        const GaussRule& g = gauss_legendre(order);
        ASSERT_EQ(int(g.nodes.size()), order);
        EXPECT_TRUE(std::is_sorted(g.nodes.begin(), g.nodes.end()));
        for (int p = 0; p <= 2 * order - 1; p += std::max(1, order / 4)) {
            double sum = 0.0;
            for (int i = 0; i < order; ++i) sum += g.weights[i] * std::pow(g.nodes[i], p);
            const double exact = p % 2 ? 0.0 : 2.0 / (p + 1);
            EXPECT_NEAR(sum, exact, 1e-13) << order << " " << p;
        }
    }
}

TEST(GaussLegendre, CachedReferenceIsStable)
{
    const GaussRule* a = &gauss_legendre(33);
    gauss_legendre(34);
    EXPECT_EQ(a, &gauss_legendre(33));
}

// Measure of the set of unit directions theta with x + rho theta in B_R(c).
double cap_measure(int n, double D, double R, double rho)
{
    const double c = std::clamp((rho * rho + D * D - R * R) / (2 * rho * D), -1.0, 1.0);
    return n == 2 ? 2 * std::acos(c) : 2 * kPi * (1 - c);
}

TEST(CapNodes, WeightsGiveCapMeasure)
{
    const Vec x(0.3, -0.2, 0.5), c(1.5, 0.7, -0.1);
    const double D2 = (truncate(x, 2) - truncate(c, 2)).norm(), D3 = (x - c).norm();
    std::vector<SphereNode> nodes;
    for (double rho : {0.4, 1.0, 1.8, 2.2}) {
        cap_nodes(2, truncate(x, 2), truncate(c, 2), 1.0, rho, {}, nodes);
        double w = 0;
        for (const auto& s : nodes) w += s.w;
        EXPECT_NEAR(w, cap_measure(2, D2, 1.0, rho), 1e-12) << rho;
        cap_nodes(3, x, c, 1.0, rho, {}, nodes);
        w = 0;
        for (const auto& s : nodes) {
            w += s.w;
            EXPECT_LT((x + rho * s.theta - c).norm(), 1.0 + 1e-12);
        }
        EXPECT_NEAR(w, cap_measure(3, D3, 1.0, rho), 1e-12) << rho;
    }
}

TEST(CapNodes, FullSphereWhenInsideBall)
{
    std::vector<SphereNode> nodes;
    cap_nodes(3, Vec::Zero(), Vec(0.1, 0, 0), 2.0, 0.5, {}, nodes);
    double w = 0;
    for (const auto& s : nodes) w += s.w;
    EXPECT_NEAR(w, 4 * kPi, 1e-12);
    cap_nodes(1, Vec::Zero(), Vec(0.1, 0, 0), 2.0, 0.5, {}, nodes);
    EXPECT_EQ(nodes.size(), 2u);
}

TEST(RadialNodes, IntervalAndSingularWeight)
{
    std::vector<RadialNode> nodes;
    for (double D : {0.0, 0.4, 2.0}) {
        const double R = 1.0, rho_max = 2.5;
        radial_nodes(D, R, rho_max, 64, nodes);
        const double a = std::max(0.0, D - R), b = std::min(rho_max, D + R);
        double w = 0, ws = 0, w2 = 0;
        for (const auto& r : nodes) {
            EXPECT_GE(r.rho, a - 1e-12);
            EXPECT_LE(r.rho, b + 1e-12);
            w += r.w;
            ws += r.w_sing;
            w2 += r.w * r.rho * r.rho;
        }
        EXPECT_NEAR(w, b - a, 1e-12);
        EXPECT_NEAR(w2, (b * b * b - a * a * a) / 3, 1e-10);
        EXPECT_NEAR(ws, std::asin(b / rho_max) - std::asin(a / rho_max), 1e-10);
    }
    radial_nodes(5.0, 1.0, 2.0, 64, nodes);
    EXPECT_TRUE(nodes.empty());
}
