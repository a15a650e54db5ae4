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

#include "photonq/fock.hpp"
#include "photonq/multiport.hpp"

namespace photonq {

/// Redirects every creation operator a+_{i,label} to
/// sum_j U_{ji} b+_{j,label}; internal labels ride through untouched.
/// Occupied spatial ports must not exceed dim(U). Modes on ports above
/// `spectator_above` are left alone (used for atom modes riding along).
PureState scatter(const PureState& input, const Unitary& u,
                  int spectator_above = -1);

struct CoincidenceResult {
  PureState projected;  // unnormalized, one particle per spatial port
  double probability = 0.0;
};

/// Keeps the terms with exactly one particle in each of the spatial ports
/// 1..N (any internal label), N = total particle number. Ports above
/// `spectator_above` are exempt from the one-per-port requirement and do not
/// count toward N.
CoincidenceResult postselect_coincidence(const PureState& state,
                                         int spectator_above = -1);

/// Gray-code Ryser evaluation, O(2^N N); N <= 24.
Complex permanent_ryser(const Eigen::Ref<const Eigen::MatrixXcd>& m);

/// Explicit permutation sum; refuses N > 10 (cost guard). Test oracle for
/// the Ryser path.
Complex permanent_bruteforce(const Eigen::Ref<const Eigen::MatrixXcd>& m);

/// One identical particle per input port: bosons give |perm U|^2, fermions
/// |det U|^2 (= 1 for any unitary).
double coincidence_probability(const Unitary& u, Statistics statistics);

}  // namespace photonq
