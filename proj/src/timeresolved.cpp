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

#include "photonq/timeresolved.hpp"

#include <cmath>
#include <stdexcept>

namespace photonq {

namespace {

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive(const std::function<double(double)>& f, double a, double m,
                double b, double fa, double fm, double fb, double whole,
                double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(a, m, fa, flm, fm);
  const double right = simpson(m, b, fm, frm, fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  if (b <= a) return 0.0;
  // Seed with a fixed split so narrow features near the middle are not
  // missed by the first Simpson estimate.
  const int seeds = 8;
  double total = 0.0;
  for (int k = 0; k < seeds; ++k) {
    const double x0 = a + (b - a) * k / seeds;
    const double x1 = a + (b - a) * (k + 1) / seeds;
    const double xm = 0.5 * (x0 + x1);
    const double f0 = f(x0), fm = f(xm), f1 = f(x1);
    total += adaptive(f, x0, xm, x1, f0, fm, f1,
                      simpson(x0, x1, f0, fm, f1), tol / seeds, 40);
  }
  return total;
}

PulseParams gaussian_pulse(double kappa, double g, double center, double width,
                           double peak_ratio, double tau) {
  if (kappa <= 0) throw std::domain_error("cavity decay rate must be positive");
  PulseParams p;
  p.kappa = kappa;
  p.g = g;
  const double peak = g * std::sqrt(peak_ratio);
  p.omega = [peak, center, width](double t) {
    const double u = (t - center) / width;
    return peak * std::exp(-0.5 * u * u);
  };
  p.support_end = 3.0 * tau;
  return p;
}

PulseParams reference_driving(double kappa_ratio) {
  const double tau = 40.0;
  return gaussian_pulse(kappa_ratio, 1.0, 20.0, tau / 10.0, 9.0, tau);
}

double pulse_shape(const PulseParams& p, double t) {
  if (t < 0) throw std::domain_error("pulse shape defined for t >= 0");
  if (t > p.support_end && p.support_end > 0) return 0.0;
  auto sin2 = [&p](double u) {
    const double w = p.omega(u);
    return w * w / (w * w + p.g * p.g);
  };
  const double s2 = sin2(t);
  const double damp = integrate(sin2, 0.0, t);
  return std::sqrt(p.kappa) * std::sqrt(s2) *
         std::exp(-0.5 * p.kappa * damp);
}

std::optional<double> fidelity_from_values(std::complex<double> f1t3,
                                           std::complex<double> f2t4,
                                           std::complex<double> f1t4,
                                           std::complex<double> f2t3) {
  const std::complex<double> cross1 = f1t3 * f2t4;
  const std::complex<double> cross2 = f1t4 * f2t3;
  const double den = 2.0 * (std::norm(cross1) + std::norm(cross2));
  if (den <= 0) return std::nullopt;
  return std::norm(cross1 + cross2) / den;
}

std::optional<double> fidelity_t(const PulseParams& p1, const PulseParams& p2,
                                 double t3, double t4) {
  return fidelity_from_values(pulse_shape(p1, t3), pulse_shape(p2, t4),
                              pulse_shape(p1, t4), pulse_shape(p2, t3));
}

double average_fidelity(const PulseParams& p1, const PulseParams& p2, double a,
                        double b) {
  if (a >= b) throw std::invalid_argument("window must satisfy a < b");
  const double tol = 1e-9;
  const double f12 = integrate(
      [&](double t) { return pulse_shape(p1, t) * pulse_shape(p2, t); }, a, b,
      tol);
  const double f11 = integrate(
      [&](double t) { double v = pulse_shape(p1, t); return v * v; }, a, b,
      tol);
  const double f22 = integrate(
      [&](double t) { double v = pulse_shape(p2, t); return v * v; }, a, b,
      tol);
  if (f11 <= 0 || f22 <= 0) return 1.0;
  return 0.5 * (1.0 + f12 * f12 / (f11 * f22));
}

double joint_density(const PulseParams& p1, const PulseParams& p2, double t3,
                     double t4) {
  const double f13 = pulse_shape(p1, t3), f24 = pulse_shape(p2, t4);
  const double f14 = pulse_shape(p1, t4), f23 = pulse_shape(p2, t3);
  return (f13 * f13 * f24 * f24 + f14 * f14 * f23 * f23) / 16.0;
}

double mode_overlap(const PulseParams& p, double t_i, double t_j) {
  // int f(u - off) f(u) du in the frame of the later pulse.
  const double off = t_i - t_j;
  const double tol = 1e-9;
  auto f = [&](double u) {
    return (u >= 0.0 && u <= p.support_end) ? pulse_shape(p, u) : 0.0;
  };
  const double lo = std::max(0.0, off);
  const double hi = std::min(p.support_end, p.support_end + off);
  double cross = 0.0;
  if (hi > lo)
    cross = integrate([&](double u) { return f(u - off) * f(u); }, lo, hi, tol);
  const double self = integrate(
      [&](double u) { const double v = f(u); return v * v; }, 0.0,
      p.support_end, tol);
  return self > 0 ? std::abs(cross) / self : 0.0;
}

}  // namespace photonq
