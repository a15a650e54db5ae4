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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "photonq/timeresolved.hpp"

using namespace photonq;
using Complex = std::complex<double>;

TEST_CASE("adaptive quadrature hits stated tolerances") {
  const double got = integrate([](double x) { return std::sin(x); }, 0.0,
                               std::numbers::pi, 1e-10);
  CHECK(std::abs(got - 2.0) < 1e-9);
  const double narrow = integrate(
      [](double x) { return std::exp(-100.0 * (x - 0.5) * (x - 0.5)); }, 0.0,
      1.0, 1e-10);
  CHECK(std::abs(narrow - std::sqrt(std::numbers::pi) / 10.0) < 1e-8);
}

TEST_CASE("zero driving emits nothing") {
  PulseParams p;
  p.kappa = 1.0;
  p.g = 1.0;
  p.omega = [](double) { return 0.0; };
  p.support_end = 50.0;
  for (double t : {0.0, 1.0, 10.0, 40.0}) CHECK(pulse_shape(p, t) == 0.0);
}

TEST_CASE("a long strong pulse emits the photon with unit probability") {
  PulseParams p = reference_driving(1.0);
  const double total = integrate(
      [&](double t) { const double f = pulse_shape(p, t); return f * f; }, 0.0,
      p.support_end, 1e-9);
  CHECK(total > 0.999);
  CHECK(total <= 1.0 + 1e-9);
}

TEST_CASE("the Gaussian driving yields a smooth single-peaked pulse") {
  PulseParams p = reference_driving(1.0);
  double last = 0.0;
  bool rising = true;
  int direction_changes = 0;
  for (int k = 1; k <= 120; ++k) {
    const double f = pulse_shape(p, 0.5 * k);
    CHECK(f >= 0.0);
    if (rising && f < last - 1e-12) {
      rising = false;
      ++direction_changes;
    } else if (!rising && f > last + 1e-9) {
      ++direction_changes;
    }
    last = f;
  }
  CHECK(direction_changes == 1);
}

TEST_CASE("coincident detection always has unit fidelity") {
  PulseParams p1 = reference_driving(0.5);
  PulseParams p2 = reference_driving(1.0);
  for (double t : {12.0, 17.0, 21.0, 26.0, 35.0}) {
    auto f = fidelity_t(p1, p2, t, t);
    REQUIRE(f.has_value());
    CHECK(std::abs(*f - 1.0) < 1e-9);
  }
}

TEST_CASE("identical pulses give unit fidelity at any pair of times") {
  PulseParams p = reference_driving(1.0);
  auto f = fidelity_t(p, p, 15.0, 27.0);
  REQUIRE(f.has_value());
  CHECK(std::abs(*f - 1.0) < 1e-9);
}

TEST_CASE("distinct cavities lose fidelity off the diagonal") {
  PulseParams p1 = reference_driving(0.5);
  PulseParams p2 = reference_driving(1.0);
  auto f = fidelity_t(p1, p2, 16.0, 30.0);
  REQUIRE(f.has_value());
  CHECK(*f < 0.999);
  CHECK(*f >= 0.5);
}

TEST_CASE("fidelity is symmetric and bounded") {
  PulseParams p1 = reference_driving(0.7);
  PulseParams p2 = reference_driving(1.0);
  for (double t3 : {14.0, 20.0, 26.0})
    for (double t4 : {15.0, 22.0, 31.0}) {
      auto a = fidelity_t(p1, p2, t3, t4);
      auto b = fidelity_t(p1, p2, t4, t3);
      REQUIRE(a.has_value());
      CHECK(*a == *b);
      CHECK(*a >= 0.5);
      CHECK(*a <= 1.0 + 1e-12);
    }
}

TEST_CASE("no detection marker outside the pulse") {
  PulseParams p = reference_driving(1.0);
  CHECK_FALSE(fidelity_t(p, p, 119.9, 119.95).has_value());
}

TEST_CASE("detuning phase restores fidelity at 2 n pi") {
  PulseParams p = reference_driving(1.0);
  const double dw = 0.7;
  auto detuned = [&](double t) {
    return Complex(pulse_shape(p, t)) * std::exp(Complex(0, -dw * t));
  };
  for (int n = 1; n <= 3; ++n) {
    const double t3 = 18.0;
    const double t4 = t3 + 2.0 * std::numbers::pi * n / dw;
    auto f = fidelity_from_values(detuned(t3), Complex(pulse_shape(p, t4)),
                                  detuned(t4), Complex(pulse_shape(p, t3)));
    REQUIRE(f.has_value());
    CHECK(std::abs(*f - 1.0) < 1e-9);
  }
  // generic separation dips below one
  auto f = fidelity_from_values(detuned(18.0), Complex(pulse_shape(p, 20.0)),
                                detuned(20.0), Complex(pulse_shape(p, 18.0)));
  CHECK(*f < 0.9);
}

TEST_CASE("average fidelity for the reference driving") {
  PulseParams p2 = reference_driving(1.0);
  CHECK(std::abs(average_fidelity(p2, p2, 0.0, p2.support_end) - 1.0) < 1e-9);
  const double f05 =
      average_fidelity(reference_driving(0.5), p2, 0.0, p2.support_end);
  const double f07 =
      average_fidelity(reference_driving(0.7), p2, 0.0, p2.support_end);
  const double f09 =
      average_fidelity(reference_driving(0.9), p2, 0.0, p2.support_end);
  CHECK(std::abs(f05 - 0.94) < 0.01);
  CHECK(std::abs(f07 - 0.98) < 0.01);
  CHECK(std::abs(f09 - 0.99) < 0.01);
  CHECK_THROWS_AS(average_fidelity(p2, p2, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("joint density behaviour") {
  PulseParams p1 = reference_driving(0.5);
  PulseParams p2 = reference_driving(1.0);
  CHECK(std::abs(joint_density(p2, p2, 14.0, 25.0) -
                 joint_density(p2, p2, 25.0, 14.0)) < 1e-15);
  for (double t3 : {5.0, 18.0, 30.0})
    for (double t4 : {9.0, 22.0, 41.0})
      CHECK(joint_density(p1, p2, t3, t4) >= 0.0);

  // mismatched cavities produce less coincidence mass
  auto mass = [](const PulseParams& a, const PulseParams& b) {
    const int n = 60;
    double total = 0;
    std::vector<double> fa(n + 1), fb(n + 1);
    for (int k = 0; k <= n; ++k) {
      fa[k] = pulse_shape(a, 120.0 * k / n);
      fb[k] = pulse_shape(b, 120.0 * k / n);
    }
    const double h = 120.0 / n;
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j)
        total += (fa[i] * fa[i] * fb[j] * fb[j] +
                  fa[j] * fa[j] * fb[i] * fb[i]) /
                 16.0 * h * h;
    return total;
  };
  CHECK(mass(p1, p2) < mass(p2, p2));
}

TEST_CASE("average fidelity equals the density-weighted fidelity") {
  PulseParams p1 = reference_driving(0.6);
  PulseParams p2 = reference_driving(1.0);
  const int n = 240;
  const double h = p2.support_end / n;
  std::vector<double> f1(n + 1), f2(n + 1);
  for (int k = 0; k <= n; ++k) {
    f1[k] = pulse_shape(p1, h * k);
    f2[k] = pulse_shape(p2, h * k);
  }
  double num = 0, den = 0;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      const double rho =
          (f1[i] * f1[i] * f2[j] * f2[j] + f1[j] * f1[j] * f2[i] * f2[i]) /
          16.0;
      if (rho <= 0) continue;
      const double cross = f1[i] * f2[j] + f1[j] * f2[i];
      num += cross * cross / 32.0;
      den += rho;
    }
  const double expectation = num / den;
  const double favg = average_fidelity(p1, p2, 0.0, p2.support_end);
  CHECK(std::abs(expectation - favg) < 1e-4);
}

TEST_CASE("mode overlap of offset pulses") {
  PulseParams p = reference_driving(1.0);
  CHECK(std::abs(mode_overlap(p, 13.0, 13.0) - 1.0) < 1e-9);
  CHECK(mode_overlap(p, 200.0, 0.0) < 1e-3);  // 5 tau apart
  double last = 1.1;
  for (double off : {0.0, 5.0, 10.0, 20.0, 40.0, 80.0}) {
    const double v = mode_overlap(p, off, 0.0);
    CHECK(v <= last + 1e-9);
    last = v;
  }
}
