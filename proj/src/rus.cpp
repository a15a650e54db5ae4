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

#include "photonq/rus.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "photonq/multiport.hpp"
#include "photonq/scattering.hpp"

namespace photonq {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);
constexpr double kMubTol = 1e-10;

// Photon x on port 1, photon y on port 2; stationary qubits ride along on
// ports 9 and 10 so that the 4x4 dual-rail networks never touch them.
constexpr int kAtomPort1 = 9;
constexpr int kAtomPort2 = 10;

Label bit_label(int b) { return b == 0 ? Label::Plus : Label::Minus; }

Eigen::Vector4cd kron2(const Eigen::Vector2cd& a, const Eigen::Vector2cd& b) {
  Eigen::Vector4cd v;
  v << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
  return v;
}

struct AbVectors {
  Eigen::Vector2cd a1, a2, b1, b2;
};

AbVectors ab_vectors(const BasisAngles& a) {
  AbVectors v;
  v.a1 << std::cos(a.theta1), std::exp(kI * a.vartheta1) * std::sin(a.theta1);
  v.a2 = std::exp(-kI * a.xi1) *
         Eigen::Vector2cd(std::exp(-kI * a.vartheta1) * std::sin(a.theta1),
                          -std::cos(a.theta1));
  v.b1 << std::cos(a.theta2), std::exp(kI * a.vartheta2) * std::sin(a.theta2);
  v.b2 = std::exp(-kI * a.xi2) *
         Eigen::Vector2cd(std::exp(-kI * a.vartheta2) * std::sin(a.theta2),
                          -std::cos(a.theta2));
  return v;
}

StateKind kind_of(const Eigen::Vector4cd& s) {
  // Concurrence-style product test: s0 s3 - s1 s2 = 0 for product states.
  const double c = std::abs(s(0) * s(3) - s(1) * s(2));
  return c < 1e-9 ? StateKind::Product : StateKind::MaximallyEntangled;
}

bool near(double x, double y, double tol = 1e-9) {
  return std::abs(x - y) < tol;
}

// Photon reference state for one basis vector, ports 1 and 2.
PureState photon_reference(const Eigen::Vector4cd& phi) {
  PureState ref(Statistics::Boson);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Complex c = phi(2 * i + j);
      if (std::abs(c) < 1e-300) continue;
      ref.add_term(FockState(Statistics::Boson,
                             {{{1, bit_label(i)}, 1}, {{2, bit_label(j)}, 1}}),
                   c);
    }
  return ref;
}

}  // namespace

TwoQubitState TwoQubitState::make(Complex a, Complex b, Complex c, Complex d) {
  TwoQubitState q;
  q.amps << a, b, c, d;
  const double n = q.amps.norm();
  if (std::abs(n - 1.0) > kNormTolerance)
    throw std::invalid_argument("two-qubit state must be normalized");
  return q;
}

TwoQubitState TwoQubitState::random(RandomStream& rng) {
  Eigen::Vector4cd v;
  for (int k = 0; k < 4; ++k) v(k) = Complex(rng.gaussian(), rng.gaussian());
  TwoQubitState q;
  q.amps = v / v.norm();
  return q;
}

BasisAngles angels_choice() {
  BasisAngles a;
  a.theta1 = a.theta2 = kPi / 4.0;
  a.xi2 = -kPi / 2.0;
  return a;
}

BasisAngles parity_choice() {
  BasisAngles a;
  a.theta1 = a.theta2 = kPi / 4.0;
  return a;
}

MeasurementBasis build_basis(const BasisAngles& a, BasisVariant variant) {
  const AbVectors v = ab_vectors(a);
  const double s = 1.0 / std::sqrt(2.0);
  MeasurementBasis b;
  if (variant == BasisVariant::FullBell) {
    b.states[0] = s * (kron2(v.a1, v.b1) + kron2(v.a2, v.b2));
    b.states[1] = s * (kron2(v.a1, v.b1) - kron2(v.a2, v.b2));
  } else {
    b.states[0] = kron2(v.a1, v.b1);
    b.states[1] = kron2(v.a2, v.b2);
  }
  b.states[2] = s * (kron2(v.a1, v.b2) + kron2(v.a2, v.b1));
  b.states[3] = s * (kron2(v.a1, v.b2) - kron2(v.a2, v.b1));
  for (int k = 0; k < 4; ++k) b.kind[k] = kind_of(b.states[k]);
  b.mub = check_mub(b);
  return b;
}

bool check_mub(const MeasurementBasis& b) {
  for (const auto& s : b.states)
    for (int k = 0; k < 4; ++k)
      if (std::abs(std::abs(s(k)) - 0.5) > kMubTol) return false;
  return true;
}

AngleCheckResult check_angle_conditions(const BasisAngles& a,
                                        BasisVariant variant) {
  AngleCheckResult res;
  const double c2t1 = std::cos(2.0 * a.theta1);
  const double c2t2 = std::cos(2.0 * a.theta2);
  const double plus = a.vartheta1 + a.vartheta2 + a.xi1 + a.xi2;
  const double minus = a.vartheta1 - a.vartheta2 + a.xi1 - a.xi2;
  switch (variant) {
    case BasisVariant::FullBell: {
      if (near(std::abs(c2t1), 1.0) || near(std::abs(c2t2), 1.0)) {
        // Degenerate family: only cos(2t1) cos(2t2) = 0 is required, but a
        // product-state detection then erases the qubits.
        res.satisfied = near(c2t1 * c2t2, 0.0);
        res.no_insurance = res.satisfied;
        return res;
      }
      res.satisfied = near(c2t1 * c2t2, 0.0) &&
                      near(std::cos(plus), 0.0) && near(std::cos(minus), 0.0);
      return res;
    }
    case BasisVariant::Insurance: {
      const bool magic = near(std::abs(std::cos(a.theta1) * std::cos(a.theta2)), 0.5) &&
                         near(std::abs(std::cos(a.theta1) * std::sin(a.theta2)), 0.5) &&
                         near(std::abs(std::sin(a.theta1) * std::cos(a.theta2)), 0.5) &&
                         near(std::abs(std::sin(a.theta1) * std::sin(a.theta2)), 0.5);
      res.satisfied = magic && near(std::cos(minus), 0.0);
      return res;
    }
    case BasisVariant::Parity: {
      const double s2t1 = std::sin(2.0 * a.theta1);
      const double s2t2 = std::sin(2.0 * a.theta2);
      bool shape;
      if (near(s2t1 * s2t2, 0.0)) {
        shape = near(s2t1, 0.0) && near(s2t2, 0.0);
      } else {
        const bool branch1 = near(std::sin(a.theta1 - a.theta2), 0.0) &&
                             near(std::cos(a.theta1 + a.theta2), 0.0);
        const bool branch2 = near(std::sin(a.theta1 + a.theta2), 0.0) &&
                             near(std::cos(a.theta1 - a.theta2), 0.0);
        shape = (branch1 || branch2) && near(std::sin(plus), 0.0) &&
                near(std::sin(minus), 0.0);
      }
      const bool magic = near(std::abs(std::cos(a.theta1) * std::cos(a.theta2)), 0.5) &&
                         near(std::abs(std::sin(a.theta1) * std::sin(a.theta2)), 0.5);
      res.satisfied = shape;
      res.no_insurance = shape && !magic;
      return res;
    }
  }
  return res;
}

PureState encode(const TwoQubitState& q) {
  PureState st(Statistics::Boson);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Complex c = q.amps(2 * i + j);
      if (std::abs(c) < 1e-300) continue;
      st.add_term(FockState(Statistics::Boson, {{{1, bit_label(i)}, 1},
                                                {{2, bit_label(j)}, 1},
                                                {{kAtomPort1, bit_label(i)}, 1},
                                                {{kAtomPort2, bit_label(j)}, 1}}),
                  c);
    }
  st.set_normalized(true);
  return st;
}

std::vector<MeasureOutcome> measure(const PureState& encoded,
                                    const MeasurementBasis& b) {
  std::vector<MeasureOutcome> out;
  for (int k = 0; k < 4; ++k) {
    PureState ref = photon_reference(b.states[k]);
    PureState atoms = partial_contract(
        encoded, ref, [](ModeIndex m) { return m.port <= 2; });
    MeasureOutcome mo;
    mo.outcome = k + 1;
    mo.probability = atoms.squared_norm();
    mo.post.amps.setZero();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        mo.post.amps(2 * i + j) = atoms.amplitude(
            FockState(Statistics::Boson, {{{kAtomPort1, bit_label(i)}, 1},
                                          {{kAtomPort2, bit_label(j)}, 1}}));
    if (mo.probability > 1e-300) mo.post.amps.normalize();
    out.push_back(std::move(mo));
  }
  return out;
}

Eigen::Matrix4cd OutcomeAction::matrix() const {
  const Complex z1 = std::exp(-kI * z_phases[0]);
  const Complex z2 = std::exp(-kI * z_phases[1]);
  Eigen::Vector4cd diag(1.0, z2, z1, z1 * z2);
  return global_phase * Eigen::Matrix4cd(diag.asDiagonal());
}

OutcomeAction classify_and_correct(int outcome, BasisVariant variant) {
  if (outcome < 1 || outcome > 4)
    throw std::invalid_argument("outcome index out of range");
  OutcomeAction act;
  act.outcome = outcome;
  const Complex e_p = std::exp(kI * kPi / 4.0);
  const Complex e_m = std::exp(-kI * kPi / 4.0);
  switch (variant) {
    case BasisVariant::Insurance:
      switch (outcome) {
        case 1:
          act.classification = OutcomeClass::Restore;
          break;
        case 2:
          act.classification = OutcomeClass::Restore;
          act.z_phases = {-kPi, -kPi};
          act.global_phase = kI;
          break;
        case 3:
          act.classification = OutcomeClass::GateSuccess;
          act.z_phases = {-kPi / 2.0, kPi / 2.0};
          act.global_phase = e_p;
          break;
        case 4:
          act.classification = OutcomeClass::GateSuccess;
          act.z_phases = {kPi / 2.0, -kPi / 2.0};
          act.global_phase = -e_m;
          break;
      }
      return act;
    case BasisVariant::FullBell:
      act.classification = OutcomeClass::GateSuccess;
      switch (outcome) {
        case 1:
          act.z_phases = {kPi / 2.0, kPi / 2.0};
          act.global_phase = e_p;
          break;
        case 2:
          act.z_phases = {-kPi / 2.0, -kPi / 2.0};
          act.global_phase = e_m;
          break;
        case 3:
          act.z_phases = {-kPi / 2.0, kPi / 2.0};
          act.global_phase = e_p;
          break;
        case 4:
          act.z_phases = {kPi / 2.0, -kPi / 2.0};
          act.global_phase = -e_m;
          break;
      }
      return act;
    case BasisVariant::Parity:
      switch (outcome) {
        case 1:
          act.classification = OutcomeClass::Restore;
          break;
        case 2:
          act.classification = OutcomeClass::Restore;
          act.z_phases = {-kPi, -kPi};
          break;
        case 3:
        case 4:
          act.classification = OutcomeClass::GateSuccess;
          act.z_phases = {0.0, kPi};
          break;
      }
      return act;
  }
  return act;
}

RusResult rus_simulate(const TwoQubitState& q, std::uint64_t seed,
                       int max_rounds, double p_detect) {
  const MeasurementBasis basis =
      build_basis(angels_choice(), BasisVariant::Insurance);
  RandomStream rng(seed, "rus");
  RusResult res;
  res.final_state = q;
  TwoQubitState state = q;
  for (int round = 1; round <= max_rounds; ++round) {
    res.rounds_used = round;
    if (p_detect < 1.0 &&
        (rng.uniform() >= p_detect || rng.uniform() >= p_detect)) {
      res.status = RusResult::Status::PhotonLoss;
      res.final_state = state;
      return res;
    }
    auto outcomes = measure(encode(state), basis);
    double r = rng.uniform();
    int pick = 3;  // guard against summed-probability rounding
    double acc = 0.0;
    for (int k = 0; k < 4; ++k) {
      acc += outcomes[k].probability;
      if (r < acc) {
        pick = k;
        break;
      }
    }
    res.outcome_sequence.push_back(pick + 1);
    OutcomeAction act = classify_and_correct(pick + 1, BasisVariant::Insurance);
    TwoQubitState corrected;
    corrected.amps = act.matrix() * outcomes[pick].post.amps;
    if (act.classification == OutcomeClass::GateSuccess) {
      res.status = RusResult::Status::Success;
      res.final_state = corrected;
      return res;
    }
    state = corrected;  // exact restore
  }
  res.status = RusResult::Status::MaxRoundsExhausted;
  res.final_state = state;
  return res;
}

namespace {

NetworkDistribution classify_photon_patterns(
    const PureState& st,
    const std::function<int(const std::vector<std::pair<int, Label>>&)>&
        classify) {
  NetworkDistribution dist;
  for (const auto& [f, a] : st.terms()) {
    std::vector<std::pair<int, Label>> photons;
    for (const auto& [m, cnt] : f.occupations())
      if (m.port < kAtomPort1)
        for (int c = 0; c < cnt; ++c) photons.push_back({m.port, m.label});
    const int cls = classify(photons);
    if (cls < 0)
      dist.leaked += std::norm(a);
    else
      dist.p[cls] += std::norm(a);
  }
  return dist;
}

}  // namespace

NetworkDistribution polarization_network(const PureState& encoded,
                                         const BasisAngles& a) {
  const AbVectors v = ab_vectors(a);
  // U_1 = |h><a1| + |v><a2| on photon 1, U_2 likewise on photon 2.
  std::vector<ModeImage> buf(2);
  ModeMap rotate = [&](ModeIndex m) -> std::span<const ModeImage> {
    if (m.port > 2) {
      buf[0] = {m, 1.0};
      return {buf.data(), 1};
    }
    const auto& u1 = m.port == 1 ? v.a1 : v.b1;
    const auto& u2 = m.port == 1 ? v.a2 : v.b2;
    const int bit = m.label == Label::Plus ? 0 : 1;
    buf[0] = {ModeIndex{m.port, Label::H}, std::conj(u1(bit))};
    buf[1] = {ModeIndex{m.port, Label::V}, std::conj(u2(bit))};
    return {buf.data(), 2};
  };
  PureState rotated = apply_linear_map(encoded, rotate);
  PureState mixed = scatter(rotated, bell_multiport(2), /*spectator_above=*/2);
  return classify_photon_patterns(
      mixed, [](const std::vector<std::pair<int, Label>>& ph) {
        if (ph.size() != 2) return -1;
        const bool h0 = ph[0].second == Label::H;
        const bool h1 = ph[1].second == Label::H;
        if (h0 && h1) return 0;
        if (!h0 && !h1) return 1;
        return ph[0].first == ph[1].first ? 2 : 3;
      });
}

NetworkDistribution dualrail_network(const PureState& encoded,
                                     DualRailNetwork which) {
  // x0 -> 1, x1 -> 3, y0 -> 2, y1 -> 4.
  std::vector<ModeImage> buf(1);
  ModeMap route = [&buf](ModeIndex m) -> std::span<const ModeImage> {
    if (m.port > 2) {
      buf[0] = {m, 1.0};
    } else {
      const int bit = m.label == Label::Plus ? 0 : 1;
      const int port = m.port == 1 ? (bit == 0 ? 1 : 3) : (bit == 0 ? 2 : 4);
      buf[0] = {ModeIndex{port, Label::None}, 1.0};
    }
    return {buf.data(), 1};
  };
  PureState routed = apply_linear_map(encoded, route);
  const Unitary u = which == DualRailNetwork::BellMultiport4
                        ? bell_multiport(4)
                        : parity_multiport();
  PureState mixed = scatter(routed, u, /*spectator_above=*/4);
  const bool bell = which == DualRailNetwork::BellMultiport4;
  return classify_photon_patterns(
      mixed, [bell](const std::vector<std::pair<int, Label>>& ph) {
        if (ph.size() != 2) return -1;
        int lo = std::min(ph[0].first, ph[1].first);
        int hi = std::max(ph[0].first, ph[1].first);
        if (lo == hi) return lo % 2 == 1 ? 0 : 1;  // bunched: 1/3 vs 2/4
        if ((lo == 1 && hi == 4) || (lo == 2 && hi == 3)) return bell ? 2 : 3;
        if ((lo == 1 && hi == 2) || (lo == 3 && hi == 4)) return bell ? 3 : 2;
        return -1;  // {1,3} and {2,4} never fire for basis inputs
      });
}

TeleportResult teleport_with_insurance(Complex alpha, Complex beta,
                                       std::uint64_t seed, int max_rounds) {
  const double n0 = std::sqrt(std::norm(alpha) + std::norm(beta));
  alpha /= n0;
  beta /= n0;
  const MeasurementBasis basis =
      build_basis(parity_choice(), BasisVariant::Parity);
  RandomStream rng(seed, "teleport");
  const double s = 1.0 / std::sqrt(2.0);
  TwoQubitState state =
      TwoQubitState::make(alpha * s, alpha * s, beta * s, beta * s);
  TeleportResult res;
  for (int round = 1; round <= max_rounds; ++round) {
    res.rounds_used = round;
    auto outcomes = measure(encode(state), basis);
    double r = rng.uniform();
    int pick = 3;
    double acc = 0.0;
    for (int k = 0; k < 4; ++k) {
      acc += outcomes[k].probability;
      if (r < acc) {
        pick = k;
        break;
      }
    }
    OutcomeAction act = classify_and_correct(pick + 1, BasisVariant::Parity);
    TwoQubitState corrected;
    corrected.amps = act.matrix() * outcomes[pick].post.amps;
    if (act.classification == OutcomeClass::Restore) {
      state = corrected;
      continue;
    }
    // Even branch: a|00> + b|11>; odd branch: a|01> + b|10>. Disentangle by
    // measuring the source in |+/->; after the conditional X (odd branch)
    // and Z (minus outcome) the target carries (a, b) for either reading.
    const bool even = pick == 2;
    const Complex a_amp = even ? corrected.amps(0) : corrected.amps(1);
    const Complex b_amp = even ? corrected.amps(3) : corrected.amps(2);
    Eigen::Vector2cd target;
    target << a_amp, b_amp;
    res.final_state = target.normalized();
    return res;
  }
  res.final_state << alpha, beta;
  return res;
}

}  // namespace photonq
