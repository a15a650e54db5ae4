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

#include <string>
#include <vector>

#include "photonq/fock.hpp"

namespace photonq {

// Polarizing-beamsplitter quantum filter: N target photons on odd ports
// 1,3,...,2N-1 compared against an entangled ancilla on even ports, detectors
// on the even output ports measuring in the |+/-> = (|H> +/- |V>)/sqrt2
// basis. Detectors are ideal, photon-number-resolving and dark-count-free;
// efficiency enters only through filter_fidelity and its POVM cross-check.

enum class DetectorReading : std::uint8_t { Plus, Minus, Empty, Multi };

struct FilterOutcome {
  std::vector<DetectorReading> syndrome;  // detector at even port 2k -> [k-1]
  PureState output;  // state on odd ports; normalized and corrected on success
  bool success = false;
  double probability = 0.0;
};

std::string syndrome_string(const std::vector<DetectorReading>& s);

/// Polarizing beam splitter on ports (1,2): H from port 1 and V from port 2
/// exit on port 2, V from port 1 and H from port 2 exit on port 1.
PureState pbs_transform(const PureState& input);

/// N-photon GHZ ancilla (|HH...H> + |VV...V>)/sqrt2 on the even ports.
PureState ghz_ancilla(int n);

/// (|HH> + |HV> + |VH> - |VV>)/2 on ports (2, 4).
PureState cz_ancilla();

/// Exhaustive syndrome table for the N-photon parity filter. Success
/// syndromes get the (-1)^J phase-flip correction (J = number of |-> clicks)
/// applied, so every success output equals P_N |psi> normalized.
std::vector<FilterOutcome> parity_filter(const PureState& input, int n);

/// Same machinery with the CZ "mask" ancilla; a Minus click on detector 2k
/// triggers a sign flip on the V component of output port 2k-1. Success
/// outputs equal P_CZ |psi> normalized.
std::vector<FilterOutcome> cz_filter(const PureState& input);

/// Closed-form preselective fidelity for the 2-photon filter with detector
/// efficiency p_d and the uniform-modulus input: F = 1/(5 - 6 p_d + 2 p_d^2).
double filter_fidelity(double p_d);

/// Explicit POVM simulation (E = p_d |+><+| + 2 p_d (1-p_d) |++><++| on each
/// detector mode) for an arbitrary 2-photon input; reproduces the closed
/// form at the uniform input.
double filter_fidelity_povm(double p_d, Complex alpha = 0.5,
                            Complex beta = 0.5, Complex gamma = 0.5,
                            Complex delta = 0.5);

/// Convenience: 2-photon input alpha|H1 H3> + beta|V1 V3> + gamma|H1 V3> +
/// delta|V1 H3>.
PureState two_photon_input(Complex alpha, Complex beta, Complex gamma,
                           Complex delta);

/// Uniform-amplitude N-photon input on the odd ports (all 2^N terms).
PureState uniform_input(int n);

}  // namespace photonq
