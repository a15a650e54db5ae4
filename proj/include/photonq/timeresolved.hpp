// Copyright 2026 The photonq authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <functional>
#include <optional>

namespace photonq {

// Cavity-emitted photon pulse shapes under the adiabatic ansatz and the
// time-resolved two-photon detection fidelity for non-identical sources.

/// Adaptive composite Simpson quadrature, absolute tolerance `tol`.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-8);

struct PulseParams {
  double kappa = 1.0;  // cavity decay rate
  double g = 1.0;      // coupling strength
  std::function<double(double)> omega;  // Rabi-frequency envelope, >= 0
  double support_end = 0.0;  // pulse treated as zero beyond this time
};

/// Gaussian driving, Omega(t) = g sqrt(peak_ratio) exp(-(t-center)^2/(2 w^2));
/// support ends at 3 tau.
PulseParams gaussian_pulse(double kappa, double g, double center, double width,
                           double peak_ratio, double tau);

/// Reference driving profile: tau = 40/kappa2, centered at 20/kappa2,
/// width tau/10, max(Omega^2/g^2) = 9; kappa = ratio * kappa2, kappa2 = 1.
PulseParams reference_driving(double kappa_ratio);

/// f(t) = sqrt(kappa) sin(theta(t)) exp(-(kappa/2) int_0^t sin^2 theta),
/// sin(theta) = Omega / sqrt(Omega^2 + g^2).
double pulse_shape(const PulseParams& p, double t);

/// F = (f1(t3) f2(t4) + f1(t4) f2(t3))^2 /
///     [2 (f1(t3)^2 f2(t4)^2 + f1(t4)^2 f2(t3)^2)]; nullopt when both cross
/// products vanish (no detection).
std::optional<double> fidelity_t(const PulseParams& p1, const PulseParams& p2,
                                 double t3, double t4);

/// Same ratio over complex pulse values (detuned sources).
std::optional<double> fidelity_from_values(std::complex<double> f1t3,
                                           std::complex<double> f2t4,
                                           std::complex<double> f1t4,
                                           std::complex<double> f2t3);

/// F_av = (1 + (int f1 f2)^2 / (int f1^2 int f2^2)) / 2 over [a, b].
double average_fidelity(const PulseParams& p1, const PulseParams& p2, double a,
                        double b);

/// ||Psi_cond||^2 = (f1(t3)^2 f2(t4)^2 + f1(t4)^2 f2(t3)^2) / 16: the
/// conditional two-detection density under the c_ij = 1/sqrt2, 50:50
/// convention; integrates to the cross-polarized detection probability.
double joint_density(const PulseParams& p1, const PulseParams& p2, double t3,
                     double t4);

/// Normalized overlap of the same pulse offset by t_i - t_j.
double mode_overlap(const PulseParams& p, double t_i, double t_j);

}  // namespace photonq
