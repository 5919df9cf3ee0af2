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


#include "dws/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace dws
{
namespace
{
GaussRule compute_rule(int order)
{
    GaussRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    for (int i = 0; i < (order + 1) / 2; ++i) {
        // Tricomi initial guess, then Newton on P_order.
        double x = std::cos(kPi * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= order; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = order * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[order - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
    return rule;
}

// Any unit vector orthogonal to e, chosen continuously enough for our use.
Vec orthogonal_unit(const Vec& e)
{
    const Vec trial = std::abs(e.x()) < 0.9 ? Vec::UnitX() : Vec::UnitY();
    return (trial - trial.dot(e) * e).normalized();
}

}  // namespace

const GaussRule& gauss_legendre(int order)
{
    require(order >= 1 && order <= 4096, "Gauss-Legendre order out of range");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<GaussRule>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[order];
    if (!slot) slot = std::make_unique<GaussRule>(compute_rule(order));
    return *slot;
}

void cap_nodes(int n, const Vec& x, const Vec& c, double R, double rho, const PolarOrders& orders,
               std::vector<SphereNode>& out)
{
    out.clear();
    const Vec to_c = truncate(c - x, n);
    const double D = to_c.norm();
    // cos(alpha) > kappa describes the cap around the direction to c.
    double kappa = -2.0;
    if (rho > 0.0 && D > 0.0) {
        kappa = (rho * rho + D * D - R * R) / (2.0 * rho * D);
        if (kappa >= 1.0) return;
    } else {
        const double reach = rho > 0.0 ? rho : D;
        if (reach >= R) return;
    }
    const Vec e = D > 0.0 ? Vec(to_c / D) : Vec(Vec::UnitX());

    if (n == 1) {
        for (double sgn : {1.0, -1.0}) {
            const double along = sgn * e.x();
            if (kappa < -1.0 || along > kappa) out.push_back({Vec(sgn, 0.0, 0.0), 1.0});
        }
        return;
    }
    if (n == 2) {
        const double amax = kappa <= -1.0 ? kPi : std::acos(kappa);
        const GaussRule& g = gauss_legendre(orders.angular);
        const Vec p(-e.y(), e.x(), 0.0);
        for (int i = 0; i < orders.angular; ++i) {
            const double a = amax * g.nodes[i];
            out.push_back({Vec(std::cos(a) * e + std::sin(a) * p), amax * g.weights[i]});
        }
        return;
    }
    const double lo = std::max(kappa, -1.0);
    const GaussRule& g = gauss_legendre(orders.angular);
    const Vec p = orthogonal_unit(e);
    const Vec q = e.cross(p);
    const double half = 0.5 * (1.0 - lo), mid = 0.5 * (1.0 + lo);
    const double dbeta = 2.0 * kPi / orders.azimuthal;
    for (int i = 0; i < orders.angular; ++i) {
        const double ca = mid + half * g.nodes[i];
        const double sa = std::sqrt(std::max(0.0, 1.0 - ca * ca));
        const double w = half * g.weights[i] * dbeta;
        for (int j = 0; j < orders.azimuthal; ++j) {
            const double b = (j + 0.5) * dbeta;
            out.push_back({Vec(ca * e + sa * (std::cos(b) * p + std::sin(b) * q)), w});
        }
    }
}

void radial_nodes(double D, double R, double rho_max, int order, std::vector<RadialNode>& out)
{
    out.clear();
    const double a = std::max(0.0, D - R);
    const double b = std::min(rho_max, D + R);
    if (!(a < b)) return;
    const GaussRule& g = gauss_legendre(order);
    auto phi_of = [&](double rho) { return std::asin(std::min(1.0, rho / rho_max)); };
    auto emit = [&](double p0, double p1) {
        const double half = 0.5 * (p1 - p0), mid = 0.5 * (p1 + p0);
        for (int i = 0; i < order; ++i) {
            const double phi = mid + half * g.nodes[i];
            const double w = half * g.weights[i];
            out.push_back({rho_max * std::sin(phi), rho_max * std::cos(phi) * w, w});
        }
    };
    const double split = R - D;
    if (split > a && split < b) {
        emit(phi_of(a), phi_of(split));
        emit(phi_of(split), phi_of(b));
    } else {
        emit(phi_of(a), phi_of(b));
    }
}

}  // namespace dws
