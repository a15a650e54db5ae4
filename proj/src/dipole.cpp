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

#include "photonq/dipole.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace photonq {

namespace {

constexpr double kPi = std::numbers::pi;
const Cd kI(0.0, 1.0);

// Two-atom basis index: atom levels {0, 1, 2}, state = 3 * level1 + level2.
int idx(int level1, int level2) { return 3 * level1 + level2; }

}  // namespace

DipoleConfig DipoleConfig::standard(double separation_wavelengths) {
  DipoleConfig cfg;
  cfg.r1 = Eigen::Vector3d(0, 0, separation_wavelengths / 2.0);
  cfg.r2 = -cfg.r1;
  cfg.d20 = Vector3cd(0, 1, kI) / std::sqrt(2.0);
  cfg.d21 = cfg.d20.conjugate();
  return cfg;
}

bool DipoleConfig::below_regime() const {
  return k0 * separation() < 2.0 * kPi * 25.0;
}

DetectorSpec detector_from_angles(double theta, double phi) {
  DetectorSpec d;
  const double st = std::sin(theta), ct = std::cos(theta);
  const double sp = std::sin(phi), cp = std::cos(phi);
  d.khat = Eigen::Vector3d(st * cp, st * sp, ct);
  d.eps_h = Vector3cd(-sp, cp, 0);
  d.eps_v = Vector3cd(-ct * cp, -ct * sp, st);
  return d;
}

DetectorSpec detector_bob() { return detector_from_angles(kPi / 2.0, 0.0); }

Eigen::Matrix<Cd, 9, 9> reset_operator(const DipoleConfig& cfg,
                                       const Eigen::Vector3d& khat,
                                       const Vector3cd& eps) {
  if (std::abs((eps.transpose() * khat.cast<Cd>()).value()) > 1e-9)
    throw std::invalid_argument("polarization must be transverse to khat");
  const double pref = std::sqrt(3.0 * cfg.gamma / (8.0 * kPi));
  const Cd phase1 = std::exp(-kI * cfg.k0 * khat.dot(cfg.r1));
  const Cd phase2 = std::exp(-kI * cfg.k0 * khat.dot(cfg.r2));
  const Cd coupling[2] = {(cfg.d20.transpose() * eps).value(),
                          (cfg.d21.transpose() * eps).value()};
  Eigen::Matrix<Cd, 9, 9> r = Eigen::Matrix<Cd, 9, 9>::Zero();
  for (int j = 0; j < 2; ++j) {
    // S-_{1,j}: |j>_1 <2|_1 (x) identity on atom 2
    for (int l2 = 0; l2 < 3; ++l2)
      r(idx(j, l2), idx(2, l2)) += pref * coupling[j] * phase1;
    // S-_{2,j}
    for (int l1 = 0; l1 < 3; ++l1)
      r(idx(l1, j), idx(l1, 2)) += pref * coupling[j] * phase2;
  }
  return r;
}

Eigen::Matrix<Cd, 9, 9> no_photon_evolution(const DipoleConfig& cfg,
                                            double dt) {
  Eigen::Matrix<Cd, 9, 9> u = Eigen::Matrix<Cd, 9, 9>::Zero();
  for (int l1 = 0; l1 < 3; ++l1)
    for (int l2 = 0; l2 < 3; ++l2) {
      const int excited = (l1 == 2 ? 1 : 0) + (l2 == 2 ? 1 : 0);
      u(idx(l1, l2), idx(l1, l2)) = std::exp(-cfg.gamma * excited * dt);
    }
  return u;
}

Eigen::Vector4cd two_photon_amplitude(const DipoleConfig& cfg,
                                      const DetectorSpec& det_a,
                                      const Vector3cd& eps_a, double t1,
                                      const DetectorSpec& det_b,
                                      const Vector3cd& eps_b, double t2,
                                      Cd c22) {
  const double n = 3.0 / (8.0 * kPi) * cfg.gamma *
                   std::exp(-cfg.gamma * (t1 + t2));
  const Vector3cd d[2] = {cfg.d20, cfg.d21};
  auto dot = [](const Vector3cd& a, const Vector3cd& b) {
    return (a.transpose() * b).value();
  };
  const Cd pa1 = std::exp(-kI * cfg.k0 * det_a.khat.dot(cfg.r1));
  const Cd pa2 = std::exp(-kI * cfg.k0 * det_a.khat.dot(cfg.r2));
  const Cd pb1 = std::exp(-kI * cfg.k0 * det_b.khat.dot(cfg.r1));
  const Cd pb2 = std::exp(-kI * cfg.k0 * det_b.khat.dot(cfg.r2));
  Eigen::Vector4cd amps;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const Cd term1 = dot(d[i], eps_b) * dot(d[j], eps_a) * pb1 * pa2;
      const Cd term2 = dot(d[j], eps_b) * dot(d[i], eps_a) * pb2 * pa1;
      amps(2 * i + j) = n * c22 * (term1 + term2);
    }
  return amps;
}

bool detector_condition(const DipoleConfig& cfg, const Eigen::Vector3d& khat_a,
                        const Eigen::Vector3d& khat_b) {
  const Cd phase =
      std::exp(-kI * cfg.k0 * (khat_a - khat_b).dot(cfg.r1 - cfg.r2));
  return std::abs(phase + 1.0) < 1e-8;
}

double correlation(const DipoleConfig& cfg, const DetectorSpec& det_a,
                   const DetectorSpec& det_b, PolarizationBasis basis) {
  Vector3cd pols_a[2], pols_b[2];
  if (basis == PolarizationBasis::Circular) {
    pols_a[0] = det_a.eps_plus();
    pols_a[1] = det_a.eps_minus();
    pols_b[0] = det_b.eps_plus();
    pols_b[1] = det_b.eps_minus();
  } else {
    pols_a[0] = det_a.eps_h;
    pols_a[1] = det_a.eps_v;
    pols_b[0] = det_b.eps_h;
    pols_b[1] = det_b.eps_v;
  }
  const double t1 = 0.3, t2 = 0.7;  // cancels in the ratio
  double joint[2][2];
  double total = 0.0;
  for (int la = 0; la < 2; ++la)
    for (int lb = 0; lb < 2; ++lb) {
      Eigen::Vector4cd amp = two_photon_amplitude(
          cfg, det_a, pols_a[la], t1, det_b, pols_b[lb], t2, Cd(1.0));
      joint[la][lb] = amp.squaredNorm();
      total += joint[la][lb];
    }
  if (total <= 0) throw std::domain_error("vanishing two-photon yield");
  return (joint[0][1] + joint[1][0]) / total;
}

namespace {
double limit_theta(double theta) {
  return std::abs(theta - kPi / 2.0) < 1e-12 ? kPi / 2.0 - 1e-6 : theta;
}
}  // namespace

double correlation_closed_pm(double theta, double phi) {
  const double t = limit_theta(theta);
  const double num = std::pow(std::cos(phi) + std::sin(t), 2) +
                     std::pow(std::cos(t) * std::sin(phi), 2);
  const double den = 2.0 * (1.0 + std::pow(std::sin(t) * std::cos(phi), 2));
  return num / den;
}

double correlation_closed_hv(double theta, double phi) {
  const double t = limit_theta(theta);
  const double num =
      std::pow(std::cos(phi), 2) + std::pow(std::sin(t), 2);
  const double den = 1.0 + std::pow(std::sin(t) * std::cos(phi), 2);
  return num / den;
}

double collection_probability(double solid_angle_a, double solid_angle_b) {
  if (solid_angle_a < 0 || solid_angle_b < 0)
    throw std::domain_error("solid angles must be nonnegative");
  return 9.0 / (64.0 * kPi * kPi) * solid_angle_a * solid_angle_b;
}

TwoQubitDensity::TwoQubitDensity(Eigen::Matrix4cd rho) : rho_(std::move(rho)) {
  if ((rho_ - rho_.adjoint()).norm() > 1e-9)
    throw std::invalid_argument("density matrix must be Hermitian");
  if (std::abs(rho_.trace().real() - 1.0) > 1e-9 ||
      std::abs(rho_.trace().imag()) > 1e-9)
    throw std::invalid_argument("density matrix must have unit trace");
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho_);
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw std::invalid_argument("density matrix must be positive semidefinite");
}

namespace {

// Basis order |hh>, |hv>, |vh>, |vv>.
Eigen::Matrix4cd povm_linear_orthogonal() {
  Eigen::Matrix4cd e = Eigen::Matrix4cd::Zero();
  e(1, 1) = 1.0;
  e(2, 2) = 1.0;
  return e;
}

Eigen::Matrix4cd povm_circular_orthogonal() {
  const Eigen::Vector2cd plus = Eigen::Vector2cd(1.0, 1.0) / std::sqrt(2.0);
  const Eigen::Vector2cd minus = Eigen::Vector2cd(1.0, -1.0) / std::sqrt(2.0);
  auto kron = [](const Eigen::Vector2cd& a, const Eigen::Vector2cd& b) {
    Eigen::Vector4cd v;
    v << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
    return v;
  };
  Eigen::Vector4cd pm = kron(plus, minus), mp = kron(minus, plus);
  return pm * pm.adjoint() + mp * mp.adjoint();
}

}  // namespace

bool singlet_constraints_hold(const TwoQubitDensity& rho) {
  const double t1 = (povm_linear_orthogonal() * rho.matrix()).trace().real();
  const double t2 = (povm_circular_orthogonal() * rho.matrix()).trace().real();
  return std::abs(t1 - 1.0) < 1e-9 && std::abs(t2 - 1.0) < 1e-9;
}

TwoQubitDensity infer_singlet() {
  // Tr(E1d rho) = 1 confines rho to span{|hv>, |vh>}:
  // rho = a |hv><hv| + c |hv><vh| + conj(c) |vh><hv| + b |vh><vh|, a + b = 1.
  // Tr(E2d rho) = 1/2 - Re c = 1 forces Re c = -1/2; positivity needs
  // |c| <= sqrt(a b) <= 1/2, so c = -1/2 and a = b = 1/2: the singlet.
  const double a = 0.5, b = 0.5, c = -0.5;
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  rho(1, 1) = a;
  rho(2, 2) = b;
  rho(1, 2) = c;
  rho(2, 1) = c;
  return TwoQubitDensity(rho);
}

}  // namespace photonq
