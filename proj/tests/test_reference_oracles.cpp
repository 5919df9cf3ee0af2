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
#include <sstream>

#include <gtest/gtest.h>

#include "dws/reference_oracles.hpp"
#include "dws/solution.hpp"

using namespace dws;

namespace
{
// RK4 on y'' + y' + k2 y = 0, y(0) = 1, y'(0) = -1.
double mode_rk4(double k2, double T)
{
    const int steps = 20000;
    const double h = T / steps;
    double y = 1, v = -1;
    auto f = [&](double yy, double vv) { return std::pair{vv, -vv - k2 * yy}; };
    for (int i = 0; i < steps; ++i) {
        auto [a1, b1] = f(y, v);
        auto [a2, b2] = f(y + 0.5 * h * a1, v + 0.5 * h * b1);
        auto [a3, b3] = f(y + 0.5 * h * a2, v + 0.5 * h * b2);
        auto [a4, b4] = f(y + h * a3, v + h * b3);
        y += h / 6 * (a1 + 2 * a2 + 2 * a3 + a4);
        v += h / 6 * (b1 + 2 * b2 + 2 * b3 + b4);
    }
    return y;
}

const InitialDatum& bump1() {
    static const InitialDatum d(1, {{Vec::Zero(), 1.0, 1.0}});
    return d;
}
}  // namespace

TEST(ModeEvolution, MatchesOdeIntegration)
{
    for (double k2 : {0.0, 0.05, 0.2, 0.25 - 1e-9, 0.25, 0.25 + 1e-9, 0.3, 1.0, 25.0})
        for (double t : {0.3, 2.0, 7.0}) EXPECT_NEAR(mode_evolution(k2, t), mode_rk4(k2, t), 1e-10) << k2 << " " << t;
    EXPECT_DOUBLE_EQ(mode_evolution(0.7, 0.0), 1.0);
    // Double root: (1 - t/2) e^(-t/2) for the (1, -1) initial state.
    EXPECT_NEAR(mode_evolution(0.25, 3.0), (1 - 1.5) * std::exp(-1.5), 1e-14);
}

TEST(FiniteDifference, RejectsCflViolationAndHigherDimensions)
{
    EXPECT_THROW(fd_solve_1d(bump1(), 1.0, 0.01, 0.0051), std::invalid_argument);
    EXPECT_THROW(fd_solve_1d(InitialDatum(2, {{Vec::Zero(), 1.0, 1.0}}), 1.0, 0.01, 0.005), std::invalid_argument);
}

TEST(FiniteDifference, InitialStateAndVelocity)
{
    const double dx = 1.0 / 256, dt = dx / 2;
    const OracleRun r0 = fd_solve_1d(bump1(), 0.0, dx, dt, 4.0);
    const OracleRun r1 = fd_solve_1d(bump1(), dt, dx, dt, 4.0);
    double e0 = 0, e1 = 0, utt = 0;
    for (int i = 0; i < r0.points; ++i) {
        const double f = eval_f(bump1(), r0.node(i));
        e0 = std::max(e0, std::abs(r0.at(i) - f));
        e1 = std::max(e1, std::abs((r1.at(i) - r0.at(i)) / dt + f));
        utt = std::max(utt, std::abs(eval_hessian_f(bump1(), r0.node(i))(0, 0) + f));
    }
    EXPECT_LE(e0, 1e-15);
    // One Taylor step: the difference quotient of u misses u_t = -f by dt/2 |u_tt|.
    EXPECT_LE(e1, 0.5 * dt * utt * (1 + 1e-9));
}

TEST(FiniteDifference, SecondOrderConvergence)
{
    // Coarser grids do not resolve the steep flanks of the bump and converge faster than h^2.
    const double T = 2.0;
    const SolutionEvaluator ev(bump1());
    for (double x : {0.5, 1.3, 2.5}) {
        std::vector<double> err;
        for (int k : {128, 256, 512}) {
            const double dx = 1.0 / k;
            const OracleRun r = fd_solve_1d(bump1(), T, dx, dx / 2, 5.0);
            const int i = r.index_of(x);
            err.push_back(std::abs(r.at(i) - ev.value(r.node(i), T)));
        }
        EXPECT_NEAR(std::log2(err[0] / err[1]), 2.0, 0.2) << x;
        EXPECT_NEAR(std::log2(err[1] / err[2]), 2.0, 0.2) << x;
    }
}

TEST(FiniteDifference, AgreesWithClosedForm)
{
    const SolutionEvaluator ev(bump1());
    const OracleRun r = fd_solve_1d(bump1(), 10.0, 1.0 / 512, 1.0 / 1024);
    for (double x : {0.0, 3.3, 9.5, 10.8}) EXPECT_NEAR(r.at(r.index_of(x)), ev.value(Vec(r.node(r.index_of(x))), 10.0), 1e-3);
}

// The discrete domain of dependence is twice the physical one at dt = dx/2;
// the leakage beyond supp f + tB shrinks faster than any power of dx and is
// below 1e-10 relative at this resolution.
TEST(FiniteDifference, FinitePropagationSpeed)
{
    const double t = 2.0, dx = 1.0 / 1024;
    const OracleRun r = fd_solve_1d(bump1(), t, dx, dx / 2);
    double outside = 0, beyond = 0;
    for (int i = 0; i < r.points; ++i) {
        const double x = std::abs(r.coordinate(i));
        if (x > t + 1.0 + 1e-12) outside = std::max(outside, std::abs(r.at(i)));
        if (x > 2 * t + 1.0 + 2 * dx) beyond = std::max(beyond, std::abs(r.at(i)));
    }
    EXPECT_LE(outside, 1e-10 * r.max_abs());
    EXPECT_EQ(beyond, 0.0);
}

TEST(Spectral, IdentityAtTimeZeroAndWraparoundGuard)
{
    const OracleRun r = spectral_solve(bump1(), 0.0, 8.0, 256);
    for (int i = 0; i < r.points; ++i) EXPECT_NEAR(r.at(i), eval_f(bump1(), r.node(i)), 1e-14);
    EXPECT_THROW(spectral_solve(bump1(), 10.0, 8.0, 256), std::invalid_argument);
    EXPECT_THROW(spectral_solve(bump1(), 1.0, 8.0, 255), std::invalid_argument);
}

TEST(Spectral, InitialVelocity)
{
    const InitialDatum d(2, {{Vec::Zero(), 1.0, 1.0}});
    const double h = 1e-4;
    const OracleRun a = spectral_solve(d, 0.0, 8.0, 128), b = spectral_solve(d, h, 8.0, 128);
    double e = 0;
    for (std::size_t i = 0; i < a.field.size(); ++i) e = std::max(e, std::abs((b.field[i] - a.field[i]) / h + a.field[i]));
    EXPECT_LE(e, 1e-2);
}

TEST(Spectral, AgreesWithFiniteDifferences)
{
    const double T = 4.0;
    const OracleRun s = spectral_solve(bump1(), T, 16.0, 4096);
    const OracleRun f = fd_solve_1d(bump1(), T, 1.0 / 256, 1.0 / 512, 16.0);
    double e = 0;
    for (double x = -5.5; x <= 5.5; x += 0.25) e = std::max(e, std::abs(s.at(s.index_of(x)) - f.at(f.index_of(x))));
    EXPECT_LE(e, 1e-4);
}

TEST(Spectral, FinitePropagationSpeed)
{
    for (int n = 1; n <= 2; ++n) {
        const InitialDatum d(n, {{Vec::Zero(), 1.0, 1.0}});
        const double t = 3.0;
        const OracleRun r = spectral_solve(d, t, n == 1 ? 16.0 : 5.0, n == 1 ? 4096 : 2560);
        double outside = 0;
        for (int i = 0; i < r.points; ++i)
            for (int j = 0; j < (n == 2 ? r.points : 1); ++j)
                if (r.node(i, j).norm() > t + 1.0 + 1e-12) outside = std::max(outside, std::abs(r.at(i, j)));
        EXPECT_LE(outside, 1e-10 * r.max_abs()) << n;
    }
}

TEST(Snapshot, CsvHasHeaderAndRows)
{
    const OracleRun r = spectral_solve(bump1(), 1.0, 4.0, 64);
    std::ostringstream out;
    write_snapshot_csv(r, out, 8);
    const std::string s = out.str();
    EXPECT_EQ(s.rfind("# units", 0), 0u);
    EXPECT_NE(s.find("x,u"), std::string::npos);
    EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), 2 + 8);
}
