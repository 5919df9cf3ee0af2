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

// Modified Bessel functions of integer order and the two kernel families
// that appear in the Bessel-kernel representation of the damped wave
// solution:
//
//   odd family   k_l(s) = I_l(s) / s^l = 2^-l sum_j (s/2)^2j / (j! (j+l)!)
//   even family  k_l(s) = sum_j s^(2j+1) / ((2(j+l))!! (2j+1)!!)
//
// together with the combined kernel
//
//   ktilde_l(r, t) = t k_{l+1}(s) - 2 k_l(s),   s = sqrt(t^2 - r^2) / 2.
//
// Every kernel grows like e^s, so the library only ever hands out the
// scaled values e^-s k_l(s) and e^-t/2 ktilde_l(r, t).

namespace dws
{
enum class Parity
{
    odd,
    even
};

struct KernelFamily
{
    Parity parity = Parity::odd;
    int ell = 0;
};

/// Series/asymptotic switchover for I_l.
inline constexpr double kBesselSeriesSwitch = 30.0;
/// Switchover for the even family. Its large-s form drops terms of relative
/// size s^(l-1) e^-s, which is why it sits above the Bessel switch.
inline constexpr double kEvenKernelSeriesSwitch = 40.0;
/// Below this argument the odd kernel is summed as its own power series.
inline constexpr double kKernelSmallArgument = 1e-3;
inline constexpr int kMaxKernelOrder = 64;

/// Kernel parity used by dimension n (n = 1 belongs to the odd family).
constexpr Parity parity_for_dimension(int n) { return n % 2 == 1 ? Parity::odd : Parity::even; }
/// Order of the kernel in the principal (diffusive) term for dimension n.
constexpr int principal_order(int n) { return n % 2 == 1 ? (n - 1) / 2 : n / 2; }

double bessel_i(int ell, double s);
/// e^-s I_l(s); finite for every s >= 0.
double bessel_i_scaled(int ell, double s);
/// e^-s times the large-s expansion of I_l truncated after `corrections`
/// powers of 1/s. Validation helper; the evaluator uses the adaptive form.
double bessel_i_asymptotic_scaled(int ell, double s, int corrections);

double kernel_k(KernelFamily family, double s);
double kernel_k_scaled(KernelFamily family, double s);
double kernel_k_at_zero(KernelFamily family);
double kernel_k_derivative_at_zero(KernelFamily family);

/// e^-t/2 ktilde_l(r, t) for 0 <= r <= t.
double kernel_ktilde_scaled(KernelFamily family, double r, double t);

/// Large-t expansion of e^-t/2 ktilde_l(r, t) for r of order sqrt(t),
/// keeping every term through 1/t^2.
double ktilde_expansion_sqrt(KernelFamily family, double r, double t);
/// Shorter expansion valid for r = o(t): leading term plus (r/t)^2 / 2.
double ktilde_expansion_smallo(KernelFamily family, double r, double t);
/// Leading behaviour of e^-t/2 ktilde_l(r, t) for bounded r.
double ktilde_leading_order(KernelFamily family, double t);
/// Common prefactor of both expansions, including exp(-r^2 / (2 (t + sqrt(t^2 - r^2)))).
double ktilde_expansion_prefactor(KernelFamily family, double r, double t);

}  // namespace dws
