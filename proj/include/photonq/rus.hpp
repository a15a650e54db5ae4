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
#include <array>
#include <optional>
#include <vector>

#include "photonq/fock.hpp"
#include "photonq/rng.hpp"

namespace photonq {

// Repeat-until-success distributed two-qubit gate: two stationary qubits
// each encode into one photon, the photon pair is measured in a partial
// Bell basis, and failure outcomes restore the input up to known local
// phase gates.

/// Amplitudes over |00>, |01>, |10>, |11>; normalized.
struct TwoQubitState {
  Eigen::Vector4cd amps;

  static TwoQubitState make(Complex a, Complex b, Complex c, Complex d);
  static TwoQubitState random(RandomStream& rng);
};

struct BasisAngles {
  double theta1 = 0, theta2 = 0;
  double vartheta1 = 0, vartheta2 = 0;
  double xi1 = 0, xi2 = 0;
};

/// xi2 = -pi/2, theta1 = theta2 = pi/4, everything else 0: the concrete
/// choice that makes the partial Bell basis mutually unbiased.
BasisAngles angels_choice();

/// theta1 = theta2 = pi/4, all phases 0: the parity-filter choice.
BasisAngles parity_choice();

enum class BasisVariant { FullBell, Insurance, Parity };
enum class StateKind { MaximallyEntangled, Product };

/// Four orthonormal two-photon states over {x0,x1} (x) {y0,y1}.
struct MeasurementBasis {
  std::array<Eigen::Vector4cd, 4> states;
  std::array<StateKind, 4> kind;
  bool mub = false;
};

MeasurementBasis build_basis(const BasisAngles& a, BasisVariant variant);

/// True iff every basis state has all four computational amplitudes of
/// modulus 1/2 (within 1e-10).
bool check_mub(const MeasurementBasis& b);

struct AngleCheckResult {
  bool satisfied = false;
  /// FullBell only: the degenerate cos(2 theta) = 1 family passes the MUB
  /// conditions but loses the insurance property.
  bool no_insurance = false;
  explicit operator bool() const { return satisfied; }
};

AngleCheckResult check_angle_conditions(const BasisAngles& a,
                                        BasisVariant variant);

/// Atom qubits on ports 3, 4 and photons on ports 1 (x) and 2 (y); logical 0
/// maps to Label::Plus, logical 1 to Label::Minus.
PureState encode(const TwoQubitState& q);

struct MeasureOutcome {
  int outcome = 0;                   // 1-based index into the basis
  double probability = 0.0;
  TwoQubitState post;                // normalized post-measurement state
};

/// Absorbing photon-pair measurement on the encoded state. Probabilities sum
/// to 1; for a MUB they are all 1/4 independent of the input.
std::vector<MeasureOutcome> measure(const PureState& encoded,
                                    const MeasurementBasis& b);

enum class OutcomeClass { GateSuccess, Restore };

struct OutcomeAction {
  int outcome = 0;
  OutcomeClass classification = OutcomeClass::Restore;
  /// Local phase gates Z_i(phi) = |0><0| + e^{-i phi} |1><1| per qubit.
  std::array<double, 2> z_phases{0.0, 0.0};
  Complex global_phase{1.0, 0.0};

  Eigen::Matrix4cd matrix() const;
};

/// Insurance: outcomes 3,4 realize U_CZ after the correction, outcomes 1,2
/// restore the input exactly. Parity: outcomes 3,4 yield the even/odd parity
/// filter output in plus-sign form, outcomes 1,2 restore.
OutcomeAction classify_and_correct(int outcome, BasisVariant variant);

inline const Eigen::Matrix4cd kCz =
    Eigen::Vector4cd(1, 1, 1, -1).asDiagonal();

struct RusResult {
  TwoQubitState final_state;
  int rounds_used = 0;
  enum class Status { Success, MaxRoundsExhausted, PhotonLoss } status =
      Status::MaxRoundsExhausted;
  std::vector<int> outcome_sequence;
};

/// Repeats encode -> sampled measurement -> correction until the CZ gate
/// fires. p_detect < 1 models independent per-photon loss; losing a photon
/// aborts the trajectory (the qubits would have to be reset).
RusResult rus_simulate(const TwoQubitState& q, std::uint64_t seed,
                       int max_rounds, double p_detect = 1.0);

/// Detection-pattern distribution over the four outcome classes.
struct NetworkDistribution {
  std::array<double, 4> p{};
  double leaked = 0.0;  // weight outside the recognized pattern classes
};

/// Photons converted to polarization via U_1 = |h><a1| + |v><a2| (and U_2
/// likewise), mixed on a 50:50 beam splitter, detected in the h/v basis.
/// Acts on the full encoded state so the photon marginal stays mixed.
NetworkDistribution polarization_network(const PureState& encoded,
                                         const BasisAngles& a);

enum class DualRailNetwork { BellMultiport4, ParityMultiport };

/// x0,x1,y0,y1 routed to ports 1,3,2,4 of the chosen 4x4 multiport.
NetworkDistribution dualrail_network(const PureState& encoded,
                                     DualRailNetwork which);

struct TeleportResult {
  Eigen::Vector2cd final_state;
  int rounds_used = 0;
};

/// Parity filter with insurance between source (alpha|0> + beta|1>) and a
/// target prepared in (|0> + |1>)/sqrt2, followed by a +/- measurement on
/// the source and conditional corrections.
TeleportResult teleport_with_insurance(Complex alpha, Complex beta,
                                       std::uint64_t seed,
                                       int max_rounds = 1000);

}  // namespace photonq
