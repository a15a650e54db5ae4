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

#include <Eigen/Dense>
#include <complex>

namespace photonq {

// Free-space emission from two distant Lambda dipoles: reset operators,
// conditional two-photon amplitudes, polarization correlations and the
// singlet inference from two POVM constraints. Coordinate convention:
// z along r1 - r2, x the quantization axis, Bob's detector on
// the x axis, D20 = (0, 1, i)/sqrt2, D21 = conj(D20).

using Cd = std::complex<double>;
using Vector3cd = Eigen::Vector3cd;

struct DipoleConfig {
  Eigen::Vector3d r1{0, 0, 12.5};   // units of the transition wavelength
  Eigen::Vector3d r2{0, 0, -12.5};
  Vector3cd d20;
  Vector3cd d21;
  double gamma = 1.0;               // spontaneous decay rate per transition
  double k0 = 2.0 * 3.14159265358979323846;  // wavenumber, lambda0 = 1

  static DipoleConfig standard(double separation_wavelengths = 25.0);
  double separation() const { return (r1 - r2).norm(); }
  /// True when k0 * r is below 2 pi * 25 (dipole-dipole terms no longer
  /// negligible; the implemented regime assumes they vanish).
  bool below_regime() const;
};

struct DetectorSpec {
  Eigen::Vector3d khat;
  Vector3cd eps_h, eps_v;  // unit, mutually orthogonal, both orthogonal to khat

  Vector3cd eps_plus() const { return (eps_h + Cd(0, 1) * eps_v) / std::sqrt(2.0); }
  Vector3cd eps_minus() const { return (eps_h - Cd(0, 1) * eps_v) / std::sqrt(2.0); }
};

/// khat = (sin t cos p, sin t sin p, cos t) with
/// eps_h = (-sin p, cos p, 0), eps_v = (-cos t cos p, -cos t sin p, sin t).
DetectorSpec detector_from_angles(double theta, double phi);

/// Bob's fixed detector on the x axis.
DetectorSpec detector_bob();

/// Two-atom reset operator on the 9-dimensional {0,1,2} x {0,1,2} space for
/// one detected photon of polarization eps in direction khat:
/// R = sqrt(3 Gamma / 8 pi) sum_{i,j} (D_2j . eps) e^{-i k0 khat.r_i} S-_{i,j}.
Eigen::Matrix<Cd, 9, 9> reset_operator(const DipoleConfig& cfg,
                                       const Eigen::Vector3d& khat,
                                       const Vector3cd& eps);

/// No-photon evolution between emissions: amplitude decay Gamma per excited
/// atom (both decay channels open).
Eigen::Matrix<Cd, 9, 9> no_photon_evolution(const DipoleConfig& cfg, double dt);

/// Conditional amplitudes on the ground states |00>,|01>,|10>,|11> after
/// detecting (detA, epsA) at t1 then (detB, epsB) at t2, starting from
/// c22 |22>. Closed-form double sum with N = (3/8pi) Gamma e^{-Gamma(t1+t2)}.
Eigen::Vector4cd two_photon_amplitude(const DipoleConfig& cfg,
                                      const DetectorSpec& det_a,
                                      const Vector3cd& eps_a, double t1,
                                      const DetectorSpec& det_b,
                                      const Vector3cd& eps_b, double t2,
                                      Cd c22);

/// e^{-i k0 (kA - kB).(r1 - r2)} = -1 within phase tolerance 1e-8.
bool detector_condition(const DipoleConfig& cfg, const Eigen::Vector3d& khat_a,
                        const Eigen::Vector3d& khat_b);

enum class PolarizationBasis { Circular, Linear };

/// Probability that Alice and Bob collect orthogonally polarized photons in
/// the given basis; computed from the general amplitude path (valid with or
/// without the detector-placement condition) and independent of t1, t2.
double correlation(const DipoleConfig& cfg, const DetectorSpec& det_a,
                   const DetectorSpec& det_b, PolarizationBasis basis);

/// Closed forms in the fixed coordinate convention, valid under the placement
/// condition. theta = pi/2 is a limit point; it is evaluated at
/// pi/2 - 1e-6 when requested exactly.
double correlation_closed_pm(double theta, double phi);
double correlation_closed_hv(double theta, double phi);

/// (9 / 64 pi^2) * dA * dB for small detector solid angles.
double collection_probability(double solid_angle_a, double solid_angle_b);

/// Hermitian, unit-trace, positive semidefinite matrix over
/// |hh>,|hv>,|vh>,|vv>.
class TwoQubitDensity {
 public:
  explicit TwoQubitDensity(Eigen::Matrix4cd rho);
  const Eigen::Matrix4cd& matrix() const { return rho_; }

 private:
  Eigen::Matrix4cd rho_;
};

/// Tr(E1d rho) = 1 and Tr(E2d rho) = 1 within 1e-9, with E1d (E2d) the
/// orthogonal-outcome projectors in the linear (circular) basis.
bool singlet_constraints_hold(const TwoQubitDensity& rho);

/// The unique density matrix satisfying both constraints with positivity:
/// the singlet |Phi-><Phi-|.
TwoQubitDensity infer_singlet();

}  // namespace photonq
