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

#include <array>
#include <vector>

#include "photonq/scattering.hpp"

namespace photonq {

// Postselected entangled-state generation through the Bell multiport.
// Photons are bosons on ports 1..N with Plus/Minus labels.

/// Product input: one photon per port, port i in the polarization
/// alpha[i][0]|+> + alpha[i][1]|->.
PureState product_input(const std::vector<std::array<Complex, 2>>& alphas);

/// |+> into port 1, |-> into every other port of bell_multiport(N), then
/// one-photon-per-port postselection. Direct expansion for small N, the
/// permanent route above (both agree, see tests).
CoincidenceResult generate_w_state(int n);

/// beta_j = U_j1 * perm(U with row j and column 1 deleted).
Complex w_amplitude_via_permanent(int n, int j);

/// Input |+,-,+,-> on bell_multiport(4): two-term GHZ-class state, P = 1/8.
CoincidenceResult generate_ghz4();

/// Input |+,+,-,->: singlet(ports 1,3) x singlet(ports 2,4), P = 1/16.
CoincidenceResult generate_double_singlet();

/// Coefficients of the postselected state on the orthonormal quadruple
/// {DS, GHZ, W, W'} for a general product input into bell_multiport(4).
struct General4Projections {
  Complex ds, ghz, w, w_prime;
};
General4Projections decompose_general4(
    const std::array<std::array<Complex, 2>, 4>& alpha);

/// Normalized reference states the projections refer to.
PureState reference_w4();
PureState reference_w4_prime();
PureState reference_ghz4();
PureState reference_double_singlet();

/// sigma_z on every even output port: clears the alternating signs of the
/// even-N W output, giving the equal-coefficient form.
PureState sigma_z_even_ports(const PureState& state);

/// sigma_x on output 1 and sigma_y on output 3: carries the raw two-term
/// output of generate_ghz4 to (|++++> + |---->)/sqrt2 up to a global phase.
PureState ghz_standard_form(const PureState& state);

struct WSweepRow {
  int n = 0;
  double p_success = 0.0;
  bool is_zero = false;
};
std::vector<WSweepRow> wstate_sweep(int n_max);
std::string wsweep_to_csv(const std::vector<WSweepRow>& rows);

/// Maximally-entangled atom-photon pairs (atom i on port N+i) sent through
/// the multiport and postselected on one photon per output port.
PureState atom_photon_joint(const Unitary& u);

/// Projects the photons of `joint` onto the product detection syndrome
/// (per-port amplitudes over +/-) and returns the unnormalized atomic
/// remainder, relabeled back to ports 1..N.
PureState project_atoms(const PureState& joint,
                        const std::vector<std::array<Complex, 2>>& syndrome);

}  // namespace photonq
