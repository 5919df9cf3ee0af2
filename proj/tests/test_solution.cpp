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

#include <gtest/gtest.h>

#include "dws/solution.hpp"
#include "dws/sweeps.hpp"

using namespace dws;

namespace
{
InitialDatum datum(int n)
{
    return InitialDatum(n, {{Vec(0.3, 0.1, -0.2), 1.0, 1.0}, {Vec(-1.5, 0.4, 0.3), 0.7, 2.0}});
}

EvalOptions fine()
{
    EvalOptions o;
    o.orders = {128, 128, 32};
    return o;
}

Vec dir(int n)
{
    return n == 1 ? Vec(1, 0, 0) : n == 2 ? Vec(0.6, 0.8, 0) : Vec(0.48, 0.64, 0.6);
}
}  // namespace

TEST(Constants, Values)
{
    EXPECT_NEAR(DimensionConstants::of(2).gamma, 1 / (4 * kPi), 1e-16);
    EXPECT_NEAR(DimensionConstants::of(3).gamma, 1 / (16 * kPi), 1e-16);
    EXPECT_NEAR(DimensionConstants::of(1).gamma, 0.5, 1e-16);
    EXPECT_NEAR(DimensionConstants::of(3).c, DimensionConstants::of(3).gamma * 4, 1e-16);
    EXPECT_NEAR(DimensionConstants::of(2).c, DimensionConstants::of(2).gamma, 1e-16);
}

TEST(Solution, InitialCondition)
{
    for (int n = 1; n <= 3; ++n) {
        const InitialDatum d = datum(n);
        const SolutionEvaluator ev(d);
        for (const Vec& x : {Vec(0.2, 0.5, 0.1), Vec(-1.4, 0.3, 0.2), Vec(0.0, 0.0, 0.0)}) {
            const Vec p = truncate(x, n);
            EXPECT_NEAR(ev.value(p, 1e-6), eval_f(d, p), 1e-3 * 2.0) << n;
        }
    }
}

TEST(Solution, DecompositionIsExact)
{
    for (int n = 1; n <= 3; ++n) {
        const SolutionEvaluator ev(datum(n));
        for (double t : {0.5, 5.0, 30.0}) {
            const FieldSample s = ev.evaluate(truncate(Vec(0.4, -0.3, 0.2), n), t);
            EXPECT_EQ(s.value, s.principal + s.wave_remainder);
        }
    }
}

TEST(Solution, Linearity)
{
    for (int n = 1; n <= 3; ++n) {
        const InitialDatum d = datum(n), d3 = d.scaled(3.5);
        const SolutionEvaluator a(d), b(d3);
        const Vec x = truncate(Vec(1.0, -0.5, 0.7), n);
        for (double t : {2.0, 15.0}) {
            const double u = a.value(x, t);
            EXPECT_NEAR(b.value(x, t), 3.5 * u, 1e-10 * std::abs(3.5 * u));
        }
    }
}

TEST(Solution, TranslationEquivariance)
{
    for (int n = 1; n <= 3; ++n) {
        const Vec v = truncate(Vec(2.0, -1.25, 0.5), n);
        const InitialDatum d = datum(n), s = d.translated(v);
        const SolutionEvaluator a(d), b(s);
        const Vec x = truncate(Vec(0.7, 0.2, -0.4), n);
        for (double t : {1.5, 12.0}) {
            const double u = a.value(x, t);
            EXPECT_NEAR(b.value(x + v, t), u, 1e-10 * std::abs(u) + 1e-16);
        }
    }
}

// (d_tt - Lap + d_t) u = 0 by central differences in t and x.
TEST(Solution, PdeResidual)
{
    for (int n = 1; n <= 3; ++n) {
        const SolutionEvaluator ev(datum(n), fine());
        const double h = 2e-2;
        for (double t : {3.0, 8.0}) {
            const Vec x = truncate(Vec(0.9, -0.6, 0.4), n);
            const double u0 = ev.value(x, t), up = ev.value(x, t + h), um = ev.value(x, t - h);
            const double utt = (up - 2 * u0 + um) / (h * h), ut = (up - um) / (2 * h);
            double lap = 0;
            for (int a = 0; a < n; ++a) {
                const Vec e = Vec::Unit(a);
                lap += (ev.value(x + h * e, t) - 2 * u0 + ev.value(x - h * e, t)) / (h * h);
            }
            const double scale = std::abs(utt) + std::abs(lap) + std::abs(ut);
            EXPECT_LE(std::abs(utt - lap + ut), 1e-3 * scale) << "n=" << n << " t=" << t;
        }
    }
}

// int u(x, t) dx solves m'' + m' = 0 with m(0) = |f|_1, m'(0) = -|f|_1, so m = |f|_1 e^-t.
TEST(Solution, MassDecaysExponentially)
{
    const InitialDatum d(1, {{Vec::Zero(), 1.0, 1.0}, {Vec(1.5, 0, 0), 0.5, 2.0}});
    const SolutionEvaluator ev(d, fine());
    for (double t : {0.5, 2.0, 4.0}) {
        const double a = -t - 1.0, b = t + 2.0;
        const int m = 6000;
        std::vector<Vec> xs;
        for (int i = 0; i <= m; ++i) xs.emplace_back(a + (b - a) * i / m, 0, 0);
        const auto s = evaluate_points(ev, xs, t);
        double sum = 0;
        for (int i = 0; i <= m; ++i) sum += (i == 0 || i == m ? 0.5 : 1.0) * s[std::size_t(i)].value;
        sum *= (b - a) / m;
        EXPECT_NEAR(sum, d.mass() * std::exp(-t), 1e-6 * d.mass()) << t;
    }
}

TEST(Solution, DerivativesMatchFiniteDifferences)
{
    for (int n = 1; n <= 3; ++n) {
        const SolutionEvaluator ev(datum(n), fine());
        const Vec om = dir(n);
        for (double t : {0.5, 3.0, 10.0, 50.0}) {
            const Vec x = truncate(Vec(0.2, 0.5, 0.1), n);
            EvalRequest r;
            r.gradient = true;
            r.directions = {om};
            const FieldSample s = ev.evaluate(x, t, r);
            const double h = 1e-4 * std::max(1.0, std::sqrt(t));
            const double fd1 = (ev.value(x + h * om, t) - ev.value(x - h * om, t)) / (2 * h);
            const double fd2 = (om.dot(ev.gradient(x + h * om, t)) - om.dot(ev.gradient(x - h * om, t))) / (2 * h);
            const double g = om.dot(*s.gradient);
            EXPECT_NEAR(g, fd1, 1e-5 * std::abs(fd1) + 1e-12 * std::abs(s.value) + 1e-14) << n << " " << t;
            EXPECT_NEAR(s.dir2[0].value, fd2, 1e-5 * std::abs(fd2) + 1e-12 * std::abs(s.value) + 1e-14)
                << n << " " << t;
            EXPECT_EQ(ev.dir2(x, t, om), s.dir2[0].value);
        }
    }
}

TEST(Solution, SymmetricBumpHasZeroGradientAtCentre)
{
    for (int n = 1; n <= 3; ++n) {
        const SolutionEvaluator ev(InitialDatum(n, {{Vec::Zero(), 1.0, 1.0}}));
        for (double t : {2.0, 40.0}) EXPECT_LE(ev.gradient(Vec::Zero(), t).norm(), 1e-13 * std::abs(ev.value(Vec::Zero(), t)) + 1e-300);
    }
}

TEST(Solution, SignPatternAtLargeTime)
{
    const InitialDatum d(2, {{Vec::Zero(), 1.0, 1.0}});
    const SolutionEvaluator ev(d);
    EXPECT_LT(ev.value(Vec::Zero(), 400.0), 0.0);
    // Outward slope on the normal ray at sqrt(2nt) - d_f / 2 past the hull.
    const Vec x(1.0 + std::sqrt(4 * 400.0) - 1.0, 0, 0);
    EXPECT_GT(ev.gradient(x, 400.0)[0], 0.0);
}

TEST(Solution, RefinementCheckReportsNonConvergence)
{
    EvalOptions o;
    o.orders = {4, 4, 2};
    o.check_refinement = true;
    o.refinement_tol = 1e-12;
    const SolutionEvaluator ev(datum(2), o);
    EXPECT_THROW(ev.value(Vec(0.2, 0.1, 0), 5.0), ConvergenceError);
    EvalOptions ok;
    ok.check_refinement = true;
    ok.refinement_tol = 1e-4;
    EXPECT_NO_THROW(SolutionEvaluator(datum(2), ok).value(Vec(0.2, 0.1, 0), 5.0));
}

TEST(GeneralDimension, AgreesWithEvaluators)
{
    for (int n = 1; n <= 3; ++n) {
        const InitialDatum d(n, {{Vec::Zero(), 1.3, 0.8}});
        const SolutionEvaluator ev(d, fine());
        for (double t : {3.0, 20.0})
            for (double r : {0.0, 0.7, 2.5}) {
                const double p = ev.evaluate(truncate(Vec(r, 0, 0), n), t).principal;
                const double g = eval_principal_general_n(n, {{1.3, 0.8}}, r, t);
                EXPECT_NEAR(g, p, 1e-8 * std::abs(p) + 1e-15) << n << " " << t << " " << r;
            }
    }
    EXPECT_LT(eval_principal_general_n(5, {{1.0, 1.0}}, 0.0, 400.0), 0.0);
    EXPECT_DOUBLE_EQ(eval_principal_general_n(4, {{1.0, 2.0}}, 0.5, 30.0),
                     2.0 * eval_principal_general_n(4, {{1.0, 1.0}}, 0.5, 30.0));
    EXPECT_THROW(eval_principal_general_n(4, {{1.0, 1.0}, {0.5, 1.0}}, 0.0, 10.0), std::invalid_argument);
}

TEST(Heat, LimitsAndNormalisation)
{
    const InitialDatum d(2, {{Vec(0.2, -0.1, 0), 1.0, 1.5}});
    const Vec x(0.5, 0.3, 0);
    EXPECT_NEAR(heat_eval(d, x, 1e-5), eval_f(d, x), 1e-3);
    const double t = 500.0;
    EXPECT_NEAR(heat_eval(d, Vec(0.2, -0.1, 0), t) / (d.mass() / (4 * kPi * t)), 1.0, 1e-3);
}

TEST(Decay, DiagnosticBoundedAndLinear)
{
    const InitialDatum d(1, {{Vec::Zero(), 1.0, 1.0}});
    const auto rows = error_decay_diagnostic(d, {5.0, 10.0, 20.0, 40.0});
    for (std::size_t i = 2; i < rows.size(); ++i) EXPECT_LE(rows[i].value_metric, 1.2 * rows[i - 1].value_metric);
    for (std::size_t i = 2; i < rows.size(); ++i)
        EXPECT_LE(rows[i].gradient_metric, 1.2 * rows[i - 1].gradient_metric);
    const auto scaled = error_decay_diagnostic(d.scaled(2.0), {5.0, 10.0, 20.0, 40.0});
    for (std::size_t i = 0; i < rows.size(); ++i)
        EXPECT_NEAR(scaled[i].value_metric, 2.0 * rows[i].value_metric, 1e-12 * rows[i].value_metric);
}

TEST(Sweeps, ParallelMatchesSerial)
{
    const SolutionEvaluator ev(datum(2));
    const auto pts = tensor_grid(2, Vec(-6, -6, 0), Vec(6, 6, 0), {9, 9});
    EvalRequest r;
    r.gradient = true;
    r.directions = {Vec(1, 0, 0)};
    const auto a = evaluate_points(ev, pts, 7.0, r, Execution::serial);
    const auto b = evaluate_points(ev, pts, 7.0, r, Execution::parallel);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].value, b[i].value);
        EXPECT_EQ(*a[i].gradient, *b[i].gradient);
        EXPECT_EQ(a[i].dir2[0].value, b[i].dir2[0].value);
    }
}

TEST(Sweeps, ExceptionsPropagateByIndex)
{
    const auto fn = [](std::size_t i) -> int {
        if (i == 3 || i == 7) throw std::runtime_error("item " + std::to_string(i));
        return int(i);
    };
    try {
        parallel_map<int>(10, fn);
        FAIL();
    } catch (const std::runtime_error& e) {
        EXPECT_STREQ(e.what(), "item 3");
    }
}
